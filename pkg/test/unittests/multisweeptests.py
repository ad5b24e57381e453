"""
Unit tests for pyGentle/multisweep.py
$Id$
"""

import unittest
from pyGentle.multisweep import MultiSweep
from pyGentle.cli import homdim_task
from pyGentle.common import GentleError
from pyGentle import fields
from quivertests import RUNNING

V3 = "(a,-1,0)(c,0,1)(b,1,2)"
W10 = "(e,2,3)(d,3,4)(a,4,3)(b,3,2)(d*c,2,1)(e,1,0)(f,0,-1)(c,-1,0)(b,0,1)(a,1,2)"

TASKS = [(RUNNING, V3, W10, False),
         (RUNNING, "(1_0,0,0)", "(1_0,0,0)", True),
         (RUNNING, "(1_1,0,0)", "(1_0,0,0)", True),
         (RUNNING, "(1_0,0,0)", "(1_1,0,0)", True)]
EXPECTED = [(2, "-"), (1, 1), (1, 1), (0, 0)]


def fragile(k):
    if k == 3:
        raise ValueError("no result for %d" % k)
    return k * k


# ==============================================================================
class MultiSweepTest(unittest.TestCase):

    def test_serial(self):
        self.assertEqual(MultiSweep(homdim_task).map(TASKS), EXPECTED)

    def test_two_processes(self):
        """Results come back in task order whatever the number of workers."""
        self.assertEqual(MultiSweep(homdim_task, num_processes=2).map(TASKS), EXPECTED)

    def test_worker_error(self):
        tasks = TASKS[:1] + [(RUNNING, "(q,0,1)", "(a,0,1)", False)]
        self.assertRaises(GentleError, MultiSweep(homdim_task, num_processes=2).map, tasks)

    def test_unexpected_worker_error(self):
        """An exception outside the GentleError family still comes back to the parent."""
        tasks = [(k,) for k in range(6)]
        self.assertRaises(GentleError, MultiSweep(fragile, num_processes=2).map, tasks)
        self.assertEqual(MultiSweep(fragile, num_processes=2).map([(k,) for k in range(3)]), [0, 1, 4])

    def test_field_spec(self):
        sweep = MultiSweep(homdim_task, field="gfp:7")
        self.assertEqual(sweep.field, "gfp:7")
        self.assertEqual(MultiSweep(homdim_task).field, fields.active_field().spec())

    def test_empty(self):
        self.assertEqual(MultiSweep(homdim_task, num_processes=3).map([]), [])


if __name__ == "__main__":
    unittest.main()
