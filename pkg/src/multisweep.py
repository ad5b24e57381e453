"""
A small framework for evaluating the same function over many word pairs in
separate processes. Results always come back in task order, so the output of
a sweep does not depend on the number of processes.

Classes:
    MultiSweep

$Id$
"""

import logging
from multiprocessing import Process, Queue
from pyGentle.common import GentleError
from pyGentle import fields

logger = logging.getLogger("pyGentle")


def run_tasks(function, field_spec, input_queue, output_queue):
    """
    Make `field_spec` the active field, then consume (index, args) tasks from
    `input_queue` until receiving the command 'STOP'.
    """
    fields.set_field(field_spec)
    for index, args in iter(input_queue.get, 'STOP'):
        try:
            output_queue.put((index, function(*args), None))
        except Exception as err:
            # exception objects with custom constructors do not survive pickling;
            # every task answers, failed or not
            output_queue.put((index, None, "%s: %s" % (type(err).__name__, err)))


class MultiSweep(object):
    """
    Runs `function` over a list of argument tuples, with `num_processes`
    worker processes. The function must be importable at module level.
    """

    def __init__(self, function, num_processes=1, field=None):
        self.function = function
        self.num_processes = max(1, int(num_processes))
        self.field = fields.field_from_spec(field or fields.active_field()).spec()

    def _serial(self, tasks):
        return [self.function(*args) for args in tasks]

    def map(self, tasks):
        """Return the list of results, one per task, in task order."""
        tasks = [tuple(args) for args in tasks]
        if self.num_processes == 1 or len(tasks) <= 1:
            return self._serial(tasks)
        task_queue = Queue()
        result_queue = Queue()
        processes = []
        for rank in range(min(self.num_processes, len(tasks))):
            p = Process(target=run_tasks,
                        args=(self.function, self.field, task_queue, result_queue))
            p.start()
            processes.append(p)
        logger.info("MultiSweep: %d tasks on %d processes" % (len(tasks), len(processes)))
        for index, args in enumerate(tasks):
            task_queue.put((index, args))
        for p in processes:
            task_queue.put('STOP')
        results = {}
        for i in range(len(tasks)):
            index, value, error = result_queue.get()
            results[index] = (value, error)
        for p in processes:
            p.join()
        ordered = []
        for index in range(len(tasks)):
            value, error = results[index]
            if error is not None:
                raise GentleError("task %d failed: %s" % (index, error))
            ordered.append(value)
        return ordered
