# -*- coding: utf-8 -*-
# Copyright 2021 The ProxQN Authors. All Rights Reserved.
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
# ============================================================================
"""Module for recording solver convergence histories.

Classes:
    TraceTable: An ordered table of per-iteration solver diagnostics
        that can be saved to and loaded from CSV.

Notes:
    Row `k` describes iterate `x^k`: its objective value, residual
    norm and regularization parameter, together with the outcome of
    the step that was computed from `x^k`. The time stamp and the
    evaluation counters are taken at the moment `x^k` became the
    current iterate. The final row of a completed run describes the
    terminal iterate and carries no step information.

"""

import numpy as np
import pandas as pd

from proxqn.utils.metrics import objective_error

TRACE_COLUMNS = (
    'k', 'time_s', 'psi', 'obj_err', 'res_norm', 'mu', 'rho', 'step_class',
    'pred', 'ared', 'd_norm', 'sub_iters', 'f_evals', 'g_evals',
    'prox_evals', 'matvecs'
)


class TraceTable(object):
    """Convergence history of a single solver run.

    Attributes:
        psi_star: The reference objective value used for the
            `obj_err` column (None if unknown).

    Methods:
        append: Append one iteration record.
        set_reference: Recompute the objective value error column.
        to_frame: Return the table as a `pandas.DataFrame`.
        save: Save the table as CSV.
        load: Load a table from CSV.
        summary: Return iteration and evaluation totals.

    """

    def __init__(self, psi_star=None):
        """Initialize.

        Arguments:
            psi_star (optional): The reference objective value.

        """
        self.psi_star = psi_star
        self._rows = []

    def __len__(self):
        """Return the number of rows."""
        return len(self._rows)

    @property
    def rows(self):
        """Return a list of row dictionaries."""
        return list(self._rows)

    @property
    def final(self):
        """Return the last row."""
        return self._rows[-1]

    def append(self, record):
        """Append one iteration record.

        Arguments:
            record: An object with an `as_row` method (e.g., an
                `IterationRecord`) or a dictionary keyed by column
                name.

        Raises:
            ValueError

        """
        if hasattr(record, 'as_row'):
            row = record.as_row()
        else:
            row = dict(record)
        if self._rows:
            last = self._rows[-1]
            if not row['k'] > last['k']:
                raise ValueError(
                    "The column `k` must be strictly increasing."
                )
            if row['time_s'] < last['time_s']:
                raise ValueError(
                    "The column `time_s` must be nondecreasing."
                )
        row['obj_err'] = objective_error(row['psi'], self.psi_star)
        self._rows.append(row)

    def set_reference(self, psi_star):
        """Set the reference value and recompute `obj_err`."""
        self.psi_star = psi_star
        for row in self._rows:
            row['obj_err'] = objective_error(row['psi'], psi_star)

    def column(self, name):
        """Return a column as a 1D array."""
        return np.array([row.get(name) for row in self._rows])

    def to_frame(self):
        """Return the table as a `pandas.DataFrame`.

        Columns outside the CSV schema (e.g., `skipped_pair`) are
        retained after the schema columns.

        """
        frame = pd.DataFrame(self._rows)
        if frame.empty:
            return pd.DataFrame(columns=list(TRACE_COLUMNS))
        extra = [c for c in frame.columns if c not in TRACE_COLUMNS]
        return frame[list(TRACE_COLUMNS) + extra]

    def save(self, filepath):
        """Save the table as CSV.

        Missing values (e.g., `rho` when no ratio was computed) are
        written as empty fields.

        Arguments:
            filepath: The destination path.

        Raises:
            OSError: If the file cannot be written.

        """
        frame = self.to_frame()[list(TRACE_COLUMNS)].copy()
        frame['step_class'] = frame['step_class'].fillna('')
        try:
            frame.to_csv(
                filepath, index=False, na_rep='', float_format='%.17g'
            )
        except OSError as e:
            raise OSError(
                "Unable to write trace file {0}: {1}".format(filepath, e)
            ) from e

    @classmethod
    def load(cls, filepath, psi_star=None):
        """Load a table from CSV.

        Arguments:
            filepath: The location of the CSV file.
            psi_star (optional): The reference objective value. If
                None, the stored `obj_err` column is kept as is.

        Raises:
            FileNotFoundError: If the file does not exist.

        """
        frame = pd.read_csv(filepath)
        missing = [c for c in TRACE_COLUMNS if c not in frame.columns]
        if missing:
            raise ValueError(
                "The trace file {0} is missing the column(s) {1}.".format(
                    filepath, ', '.join(missing)
                )
            )
        table = cls(psi_star=psi_star)
        stored_err = frame['obj_err'].to_numpy()
        for i_row, row in enumerate(frame.to_dict(orient='records')):
            if not isinstance(row['step_class'], str):
                row['step_class'] = None
            table.append(row)
            if psi_star is None:
                table._rows[-1]['obj_err'] = stored_err[i_row]
        return table

    def summary(self):
        """Return iteration and evaluation totals.

        Returns:
            A dictionary with the number of steps (`iter`), the number
            of steps per class, the cumulative number of subsolver
            iterations, the final evaluation counters and the final
            time stamp.

        """
        if not self._rows:
            raise ValueError("The trace table is empty.")
        step_class = [row.get('step_class') for row in self._rows]
        final = self._rows[-1]
        skipped = [bool(row.get('skipped_pair', False)) for row in self._rows]
        return {
            'iter': len(self._rows) - 1,
            'highly_succ_iter': step_class.count('highly_successful'),
            'succ_iter': step_class.count('successful'),
            'unsucc_iter': step_class.count('unsuccessful'),
            'sub_iter': int(np.nansum(self.column('sub_iters'))),
            'function_eval': int(final['f_evals']),
            'gradient_eval': int(final['g_evals']),
            'prox_eval': int(final['prox_evals']),
            'matvec': int(final['matvecs']),
            'skipped_updates': int(np.sum(skipped)),
            'time_s': float(final['time_s']),
        }
