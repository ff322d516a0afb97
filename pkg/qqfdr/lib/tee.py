#!/usr/bin/env python
#
# Console output mirrored to a log file
#

import sys


class Tee(object):
    """ Mirror console output to a log file. `stream` is the console stream (sys.stdout for reports, sys.stderr for diagnostics).
    With nostdout only the log is written, with silent nothing is. """

    def __init__(self, name=None, mode=None, nostdout=False, silent=False, stream=None):
        self.silent = silent
        self.nostdout = nostdout
        self.stream = None if nostdout else (stream or sys.stdout)
        self.filename = name
        self.filemode = mode or ''
        self.file = open(name, mode) if name is not None and mode is not None else None

    def _sinks(self):
        if self.silent:
            return []
        return [s for s in (self.stream, self.file) if s is not None]

    def _encode(self, sink, text):
        # binary log files get utf-8 bytes, everything else text
        if sink is self.file and 'b' in self.filemode and not isinstance(text, bytes):
            return text.encode('utf-8')
        return text

    def write(self, data, end="\n", flush=True):
        """ Output data followed by `end` to the console and/or the log file """
        for sink in self._sinks():
            sink.write(self._encode(sink, data))
            sink.write(self._encode(sink, end))
        if flush:
            self.flush()

    def flush(self):
        for sink in self._sinks():
            sink.flush()

    def close(self):
        """ Flush and close the log file, the console stream is left open """
        try:
            self.flush()
        except (IOError, OSError, ValueError):
            pass  # already closed
        self.stream = None
        if self.file is not None:
            self.file.close()
            self.file = None

    def stream_view(self):
        """ File-like view for writers that manage their own line endings (tqdm): write(s) passes s through as is """
        return TeeStream(self)

    def __del__(self):
        self.close()


class TeeStream(object):
    """ Raw file-like access to a Tee """

    def __init__(self, tee):
        self.tee = tee

    def write(self, data):
        self.tee.write(data, end='', flush=False)

    def flush(self):
        self.tee.flush()


def open_tees(log=None, silent=False):
    '''Console/log pair used by the tools: one Tee on stdout for reports, one on stderr for diagnostics, both appending to the same log file if any'''
    mode = 'a' if log else None
    ptee = Tee(log, mode, nostdout=silent)
    perr = Tee(log, mode, nostdout=silent, stream=sys.stderr)
    return ptee, perr
