"""
A collection of utility functions and classes.

Functions:
    init_logging()    - convenience function for setting up logging to file and
                        to the screen.

    Timer    - a convenience wrapper around the time.time() function from the
               standard library.

$Id$
"""

import logging
import time
import os

LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'


def init_logging(logfile, debug=False, num_processes=1, rank=0):
    """
    Configure the root logger. With `logfile` None the messages go to stderr;
    worker processes get their rank appended to the file name.
    """
    level = debug and logging.DEBUG or logging.INFO
    if logfile is None:
        logging.basicConfig(level=level, format=LOG_FORMAT)
        return None
    if num_processes > 1:
        logfile += '.%d' % rank
    logfile = os.path.abspath(logfile)
    logging.basicConfig(level=level,
                        format=LOG_FORMAT,
                        filename=logfile,
                        filemode='w')
    return logfile


class Timer(object):
    """For timing sweeps."""

    def __init__(self):
        self.start()

    def start(self):
        """Start timing."""
        self._start_time = time.time()

    def elapsedTime(self, format=None):
        """Return the elapsed time in seconds but keep the clock running."""
        current_time = time.time()
        elapsed_time = current_time - self._start_time
        if format == 'long':
            elapsed_time = Timer.time_in_words(elapsed_time)
        return elapsed_time

    @staticmethod
    def time_in_words(s):
        """Formats a time in seconds as a string containing the time in days,
        hours, minutes, seconds. Examples::
            >>> Timer.time_in_words(1)
            '1 second'
            >>> Timer.time_in_words(123)
            '2 minutes, 3 seconds'
            >>> Timer.time_in_words(24*3600)
            '1 day'
        """
        T = {}
        T['year'], s = divmod(s, 31556952)
        minutes, T['second'] = divmod(s, 60)
        h, T['minute'] = divmod(minutes, 60)
        T['day'], T['hour'] = divmod(h, 24)
        def add_units(val, units):
            return "%d %s" % (int(val), units) + (int(val) > 1 and 's' or '')
        return ', '.join([add_units(T[part], part) for part in ('year', 'day', 'hour', 'minute', 'second') if int(T[part]) > 0])
