#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Make provide.arccomplex executable via python -m provide.arccomplex."""

from __future__ import annotations

from provide.arccomplex.main import main

if __name__ == "__main__":
    main()

# 🔺✅🔚
