# -*- coding: utf-8 -*-
# Copyright 2026 The nsflab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Fixed-order reductions.

Field integrals are summed by a pairwise tree over the flattened (C order)
array. The tree shape depends only on the array size, so a result never
depends on how many workers produced the array.
"""

import numpy as np


def tree_sum(values) -> float:
    """
    Sums all entries of values by a fixed pairwise tree.

    :param values: array of any shape
    :return: sum as a Python float
    """
    work = np.array(values, dtype=float).ravel()
    if work.size == 0:
        return 0.0
    while work.size > 1:
        if work.size % 2:
            work = np.append(work, 0.0)
        work = work[0::2] + work[1::2]
    return float(work[0])


def tree_max(values) -> float:
    work = np.asarray(values, dtype=float).ravel()
    if work.size == 0:
        return -np.inf
    return float(np.max(work))


def tree_min(values) -> float:
    work = np.asarray(values, dtype=float).ravel()
    if work.size == 0:
        return np.inf
    return float(np.min(work))
