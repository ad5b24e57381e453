"""
Provides standard interfaces to the text formats used for saving results:
dimension tables, morphism bases, band grids and AR graphs.

To save a table in a given format, pass an instance of any of the File
classes to Recorder.write().

Classes:
    TabularTextFile
    JSONFile
    DotFile

$Id$
"""

import json
import numpy
from pyGentle.common import SCHEMA_VERSION

DEFAULT_BUFFER_SIZE = 10000


class BaseFile(object):
    """
    Base class for pyGentle File classes. `filename` may also be an open
    stream such as sys.stdout, which is flushed but never closed.
    """

    def __init__(self, filename, mode='r'):
        """
        Open a file with the given filename and mode.
        """
        self.mode = mode
        if hasattr(filename, 'write') or hasattr(filename, 'read'):
            self.name = getattr(filename, 'name', '<stream>')
            self.fileobj = filename
            self._owned = False
        else:
            self.name = filename
            self.fileobj = open(self.name, mode, DEFAULT_BUFFER_SIZE)
            self._owned = True

    def __del__(self):
        self.close()

    def write(self, data, metadata):
        """
        Write data and metadata to file. `data` is a list of rows (or any
        JSON-serializable object for JSONFile), `metadata` a dictionary.
        """
        raise NotImplementedError

    def read(self):
        """
        Read data from the file.
        """
        raise NotImplementedError

    def get_metadata(self):
        """
        Read metadata from the file and return a dict.
        """
        raise NotImplementedError

    def close(self):
        """Close the file."""
        if not hasattr(self, 'fileobj'):
            return
        if self._owned:
            self.fileobj.close()
        elif not self.fileobj.closed:
            self.fileobj.flush()


class TabularTextFile(BaseFile):
    """
    Metadata is written at the top of the file, with each line preceded by
    "#". Data is written with one tab-separated row per line.
    """

    def write(self, data, metadata):
        __doc__ = BaseFile.write.__doc__
        header_lines = ["# %s = %s" % item for item in sorted(metadata.items())]
        if header_lines:
            self.fileobj.write("\n".join(header_lines) + '\n')
        if len(data) > 0:
            numpy.savetxt(self.fileobj, numpy.array(data, dtype=object), fmt='%s', delimiter='\t')
        self.close()

    def _lines(self):
        self.fileobj.seek(0)
        lines = self.fileobj.read().splitlines()
        self.fileobj.seek(0)
        return lines

    def read(self):
        __doc__ = BaseFile.read.__doc__
        return [line.split('\t') for line in self._lines() if line and not line.startswith('#')]

    def get_metadata(self):
        __doc__ = BaseFile.get_metadata.__doc__
        D = {}
        for line in self._lines():
            if line.startswith('#') and ' = ' in line:
                name, value = line[1:].split(' = ', 1)
                D[name.strip()] = value.strip()
        return D


class JSONFile(BaseFile):
    """
    Data and metadata are saved as one JSON document carrying the schema
    version.
    """

    def write(self, data, metadata):
        __doc__ = BaseFile.write.__doc__
        document = {"schema_version": SCHEMA_VERSION, "metadata": metadata, "data": data}
        json.dump(document, self.fileobj, indent=2, sort_keys=True)
        self.fileobj.write('\n')
        self.close()

    def _document(self):
        self.fileobj.seek(0)
        document = json.load(self.fileobj)
        self.fileobj.seek(0)
        return document

    def read(self):
        __doc__ = BaseFile.read.__doc__
        return self._document()["data"]

    def get_metadata(self):
        __doc__ = BaseFile.get_metadata.__doc__
        return self._document()["metadata"]


class DotFile(BaseFile):
    """
    Graphviz text. `data` is either the complete DOT text or a list of
    (source, target, label) edges; metadata becomes comment lines.
    """

    def write(self, data, metadata):
        __doc__ = BaseFile.write.__doc__
        for item in sorted(metadata.items()):
            self.fileobj.write("// %s = %s\n" % item)
        if isinstance(data, str):
            self.fileobj.write(data)
        else:
            lines = ["digraph %s {" % metadata.get("name", "G")]
            for source, target, label in data:
                lines.append('  "%s" -> "%s" [label="%s"];' % (source, target, label))
            lines.append("}")
            self.fileobj.write("\n".join(lines) + "\n")
        self.close()

    def read(self):
        __doc__ = BaseFile.read.__doc__
        self.fileobj.seek(0)
        text = self.fileobj.read()
        self.fileobj.seek(0)
        return "".join(line + "\n" for line in text.splitlines() if not line.startswith("//"))

    def get_metadata(self):
        __doc__ = BaseFile.get_metadata.__doc__
        self.fileobj.seek(0)
        D = {}
        for line in self.fileobj.read().splitlines():
            if line.startswith("//") and " = " in line:
                name, value = line[2:].split(" = ", 1)
                D[name.strip()] = value.strip()
        self.fileobj.seek(0)
        return D


FORMATS = {"tsv": TabularTextFile, "json": JSONFile, "dot": DotFile}
