# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
Time-frequency anomaly detection for univariate and multivariate time series

**Software and Dependencies:**

* numpy, scipy: decomposition, spectra and the neural network engine
* pandas: CSV datasets
* PyYAML: configuration files and reports
"""

__version__ = "0.1.0"
