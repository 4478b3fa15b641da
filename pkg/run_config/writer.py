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

import csv
import io
import json
from abc import ABCMeta, abstractmethod
from os import path, makedirs
from shutil import rmtree

from nsflab.grid_fields.snapshot import encode_snapshot


def format_value(value) -> str:
    """Shortest round-trip text of a float; other values as str"""
    if isinstance(value, float):
        return repr(value)
    return str(value)


class Writer(metaclass=ABCMeta):
    """Interface Writer"""

    @abstractmethod
    def write_csv(self, relative_path: str, header: list, rows: list):
        pass

    @abstractmethod
    def write_plot_data(self, relative_path: str, header: list, rows: list):
        pass

    @abstractmethod
    def write_summary(self, relative_path: str, values: dict):
        pass

    @abstractmethod
    def write_manifest(self, relative_path: str, manifest: dict):
        pass

    @abstractmethod
    def write_snapshot(self, relative_path: str, grid, time: float, fields: dict, meta: dict = None):
        pass


class FileWriter(Writer):

    def __init__(self, output_root_dir: str) -> None:
        """Initializes FileWriter with setting output root dir

        :param output_root_dir: the output root directory receiving every artifact
        :return: None
        """
        self.output_root_dir = output_root_dir

    def _target(self, relative_path: str) -> str:
        target = path.join(self.output_root_dir, relative_path)
        makedirs(path.dirname(target), exist_ok=True)
        return target

    def _write_text(self, relative_path: str, text: str) -> str:
        target = self._target(relative_path)
        with open(target, 'w', newline='') as f:
            f.write(text)
        return target

    def write_csv(self, relative_path: str, header: list, rows: list) -> str:
        """Writes a CSV table with a fixed header line"""
        buffer = io.StringIO()
        table = csv.writer(buffer, lineterminator='\n')
        table.writerow(header)
        for row in rows:
            table.writerow([format_value(value) for value in row])
        return self._write_text(relative_path, buffer.getvalue())

    def write_plot_data(self, relative_path: str, header: list, rows: list) -> str:
        """Whitespace separated columns under a `#` comment header"""
        lines = ['# ' + ' '.join(header)]
        lines.extend(' '.join(format_value(float(value)) for value in row) for row in rows)
        return self._write_text(relative_path, '\n'.join(lines) + '\n')

    def write_summary(self, relative_path: str, values: dict) -> str:
        """Key-value block, one `key = value` line per entry, nested dicts flattened with dots"""
        lines = []

        def walk(prefix, entry):
            for key in entry:
                value = entry[key]
                name = f'{prefix}{key}'
                if isinstance(value, dict):
                    walk(name + '.', value)
                else:
                    lines.append(f'{name} = {format_value(value)}')

        walk('', values)
        return self._write_text(relative_path, '\n'.join(lines) + '\n')

    def write_manifest(self, relative_path: str, manifest: dict) -> str:
        return self._write_text(relative_path, json.dumps(manifest, indent=2, sort_keys=True) + '\n')

    def write_snapshot(self, relative_path: str, grid, time: float, fields: dict, meta: dict = None) -> str:
        target = self._target(relative_path)
        with open(target, 'wb') as f:
            f.write(encode_snapshot(grid, time, fields, meta))
        return target

    def clean(self) -> bool:
        """Cleans output root directory

        :return bool: True for success on cleaning it and False for fail
        """
        if path.isdir(self.output_root_dir):
            rmtree(self.output_root_dir)
            return True
        else:
            return False
