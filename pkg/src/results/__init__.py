"""
Defines classes for collecting and writing result tables (dimension tables,
band grids, AR arrows and morphism bases).

These classes are used by the command line tool and by the system tests.

Classes:
    Recorder

$Id$
"""

import logging
import os.path
from pyGentle.common import InvalidParametersError
from pyGentle.results import files

logger = logging.getLogger("pyGentle")


def rename_existing(filename):
    if os.path.exists(filename):
        os.rename(filename, "%s_old" % filename)
        logger.warning("File %s already exists. Renaming the original file to %s_old" % (filename, filename))


class Recorder(object):
    """Collects the rows of one result table and writes them in a stable order."""

    formats = {'homdim': 'source target dim oracle_dim',
               'bands': 'r s lambda mu k dim',
               'ar': 'source target kind',
               'basis': 'index kind source target components'}

    def __init__(self, table, file=None, metadata=None):
        """
        Create a recorder.

        `table` -- "homdim", "bands", "ar" or "basis"
        `file` -- a file name, a File instance or `None` (keep in memory)
        `metadata` -- extra header entries (algebra name, field, window...)
        """
        if table not in Recorder.formats:
            raise InvalidParametersError("unknown table '%s', expected one of %s" % (table, sorted(Recorder.formats)))
        self.table = table
        self.file = file
        self.rows = []
        self.extra_metadata = dict(metadata or {})

    @property
    def columns(self):
        return self.formats[self.table].split()

    def record(self, row):
        """Add one row; its length must match the table's columns."""
        row = tuple(row)
        if len(row) != len(self.columns):
            raise InvalidParametersError("a '%s' row needs %d columns, got %d" % (self.table, len(self.columns), len(row)))
        self.rows.append(row)

    def extend(self, rows):
        for row in rows:
            self.record(row)

    @staticmethod
    def _sort_key(row):
        return tuple((0, item, "") if isinstance(item, int) else (1, 0, str(item)) for item in row)

    def get(self):
        """Return the rows in a fixed order, so output does not depend on evaluation order."""
        return sorted(self.rows, key=self._sort_key)

    @property
    def metadata(self):
        metadata = {'table': self.table,
                    'columns': " ".join(self.columns),
                    'n': len(self.rows)}
        metadata.update(self.extra_metadata)
        return metadata

    def as_records(self):
        """Rows as dictionaries keyed by column name (JSON data)."""
        return [dict(zip(self.columns, row)) for row in self.get()]

    def write(self, file=None, format="tsv"):
        """Write the table to `file` (a file name or a File instance)."""
        file = file or self.file
        if file is None:
            raise InvalidParametersError("Recorder has no output file")
        if isinstance(file, str) or not isinstance(file, files.BaseFile):
            if format not in files.FORMATS:
                raise InvalidParametersError("unknown format '%s'" % format)
            logger.debug("Recorder is writing '%s' to file '%s' as %s" % (self.table, file, format))
            file = files.FORMATS[format](file, mode='w')
        if isinstance(file, files.JSONFile):
            data = self.as_records()
        elif isinstance(file, files.DotFile):
            data = [tuple(row[:3]) for row in self.get()]
        else:
            data = self.get()
        logger.debug("data has %d rows" % len(data))
        file.write(data, self.metadata)
        file.close()
