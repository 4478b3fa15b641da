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

import logging

ROOT = 'nsflab'


class Logger:
    """
    Tag based logging facade.

    usage:
        TAG = 'NsfSolver'
        Logger.debug(f'step: t = {t}', TAG)
    """

    @staticmethod
    def _get(tag: str) -> logging.Logger:
        return logging.getLogger(f'{ROOT}.{tag}' if tag else ROOT)

    @staticmethod
    def debug(msg: str, tag: str = None):
        Logger._get(tag).debug(msg)

    @staticmethod
    def info(msg: str, tag: str = None):
        Logger._get(tag).info(msg)

    @staticmethod
    def warning(msg: str, tag: str = None):
        Logger._get(tag).warning(msg)

    @staticmethod
    def error(msg: str, tag: str = None):
        Logger._get(tag).error(msg)

    @staticmethod
    def configure(verbose: bool = False):
        """Configures the root laboratory logger once; used by the CLI"""
        logger = logging.getLogger(ROOT)
        if not logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s [%(name)s] %(message)s'))
            logger.addHandler(handler)
        logger.setLevel(logging.DEBUG if verbose else logging.INFO)
