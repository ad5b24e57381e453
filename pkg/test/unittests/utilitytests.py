"""
Unit tests for pyGentle/utility.py
$Id$
"""

import logging
import os
import tempfile
import time
import unittest
from pyGentle import utility


class InitLoggingTests(unittest.TestCase):

    def setUp(self):
        self.root = logging.getLogger()
        self.handlers = list(self.root.handlers)

    def tearDown(self):
        for handler in self.root.handlers[:]:
            if handler not in self.handlers:
                self.root.removeHandler(handler)
                handler.close()

    def test_initlogging_debug(self):
        """Worker processes log to a file with their rank appended."""
        for handler in self.root.handlers[:]:
            self.root.removeHandler(handler)
        directory = tempfile.mkdtemp()
        filename = os.path.join(directory, "test.log")
        result = utility.init_logging(filename, debug=True, num_processes=2, rank=99)
        self.assertEqual(result, os.path.abspath(filename + ".99"))
        assert os.path.exists(filename + ".99")
        logging.getLogger().handlers[0].close()
        os.remove(filename + ".99")
        os.rmdir(directory)
        for handler in self.handlers:
            self.root.addHandler(handler)

    def test_initlogging_stderr(self):
        self.assertEqual(utility.init_logging(None), None)


class TimerTest(unittest.TestCase):

    def test_timer(self):
        timer = utility.Timer()
        time.sleep(0.1)
        assert timer.elapsedTime() > 0
        assert isinstance(timer.elapsedTime(format='long'), str)
        timer.start()
        assert timer.elapsedTime() < 0.1

    def test_time_in_words(self):
        self.assertEqual(utility.Timer.time_in_words(3661), "1 hour, 1 minute, 1 second")


# ==============================================================================
if __name__ == "__main__":
    unittest.main()
