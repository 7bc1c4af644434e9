#
# SPDX-FileCopyrightText: Copyright (c) provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""Provide namespace package."""

__path__ = __import__("pkgutil").extend_path(__path__, __name__)

# 🔺✅🔚
