# Copyright 2026 The orderfinding authors.
#
# For a full list of individual contributors, please see the commit history.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Dataset module. Configuration of molecules and rendering."""
import json
import logging
from collections import OrderedDict

from orderfinding.exceptions import ConfigError, ParseError
from orderfinding.spectra import DEFAULT_HALF_SPAN, DEFAULT_POINTS, MoleculeParams, \
    synthetic_molecule

MOLECULE_KEYS = ("shifts", "J", "linewidth_hz")


class Dataset:
    """Configuration store, seeded with the synthetic molecule.

    A molecule file is JSON::

        {
            "shifts": [0.0, -2500.0, 4800.0, -7300.0, 9600.0],
            "J": [[0, 43.5, ...], ...],
            "linewidth_hz": 1.0,
            "reference_spin": 1
        }
    """

    logger = logging.getLogger("Dataset")

    def __init__(self):
        """Create an initial dataset of defaults."""
        molecule = synthetic_molecule()
        self.__dataset = {
            "shifts": molecule.shifts.tolist(),
            "J": molecule.couplings.tolist(),
            "linewidth_hz": molecule.linewidth,
            "reference_spin": molecule.reference_spin,
            "grid_half_span": DEFAULT_HALF_SPAN,
            "grid_points": DEFAULT_POINTS,
        }

    def add(self, key, value):
        """Add a new dataset value and key.

        :param key: Configuration key.
        :type key: str
        :param value: Configuration value.
        :type value: any
        """
        self.__dataset[key] = value

    def merge(self, dataset):
        """Merge a dictionary into this dataset.

        :param dataset: Keys and values to merge.
        :type dataset: dict
        """
        self.__dataset.update(**dataset)

    def get(self, key, default=None):
        """Get a key from the dataset.

        :param key: Key to get.
        :type key: str
        :param default: Default value if the key does not exist.
        :type default: any
        :return: Value or default.
        :rtype: any
        """
        return self.__dataset.get(key, default)

    def load(self, path):
        """Merge a JSON molecule file, which must define every molecule key.

        :raises: :obj:`orderfinding.exceptions.ParseError` on invalid JSON.
        :raises: :obj:`orderfinding.exceptions.ConfigError` naming a missing key.
        :param path: File to read.
        :type path: str
        """
        self.logger.debug("Loading configuration %r", path)
        with open(path) as config_file:
            text = config_file.read()
        try:
            data = json.loads(text, object_pairs_hook=OrderedDict)
        except json.JSONDecodeError as exception:
            lines = text.splitlines() or [""]
            line = lines[min(exception.lineno, len(lines)) - 1]
            raise ParseError("{} in {}".format(exception.msg, path), line,
                             exception.colno, exception.lineno) from exception
        if not isinstance(data, dict):
            raise ConfigError("Configuration {} must be a JSON object".format(path))
        for key in MOLECULE_KEYS:
            if key not in data:
                raise ConfigError("Missing configuration key {!r} in {}".format(key, path))
        self.merge(data)

    def molecule(self):
        """Molecule built from the dataset.

        :raises: :obj:`orderfinding.exceptions.ConfigError` naming a missing or bad key.
        :rtype: :obj:`orderfinding.spectra.MoleculeParams`
        """
        values = {}
        for key in MOLECULE_KEYS:
            value = self.get(key)
            if value is None:
                raise ConfigError("Missing configuration key {!r}".format(key))
            values[key] = value
        try:
            return MoleculeParams(values["shifts"], values["J"], float(values["linewidth_hz"]),
                                  int(self.get("reference_spin", 1)))
        except (TypeError, ValueError) as exception:
            raise ConfigError("Malformed molecule configuration: {}".format(exception)) \
                from exception

    def grid(self, spin, molecule=None):
        """Rendering grid, the "grid" value when set, else centered on a spin's shift.

        :rtype: tuple
        """
        if self.get("grid") is not None:
            return tuple(self.get("grid"))
        molecule = molecule or self.molecule()
        half_span = float(self.get("grid_half_span"))
        center = molecule.shift(spin)
        return center - half_span, center + half_span, int(self.get("grid_points"))
