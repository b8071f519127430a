#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2016 Yang-Baxter basis developers

# Author(s):

#   Yang-Baxter basis developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Worker threads for column-wise table assembly.
"""

import logging
from queue import Empty, Queue
from threading import Lock, Thread

logger = logging.getLogger(__name__)


class Worker(Thread):

    """Take (position, item) jobs from a queue and store the results.
    """

    def __init__(self, function, jobs, results, errors, lock):
        Thread.__init__(self)
        self.daemon = True
        self._function = function
        self._jobs = jobs
        self._results = results
        self._errors = errors
        self._lock = lock
        self._loop = True

    def run(self):
        logger.debug("Starting %s", self.name)
        while self._loop:
            try:
                position, item = self._jobs.get_nowait()
            except Empty:
                break
            try:
                result = self._function(item)
            except Exception as err:
                logger.exception("There was an error!")
                with self._lock:
                    self._errors.append(err)
                self.stop()
            else:
                self._results[position] = result
            finally:
                self._jobs.task_done()
        logger.debug("Stopping %s", self.name)

    def stop(self):
        """Stop the worker after the current job.
        """
        self._loop = False


def run_parallel(function, items, jobs=1):
    """Map *function* over *items* with *jobs* threads.

    Results come back in input order, whatever the number of threads.
    """
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [function(item) for item in items]
    queue = Queue()
    for position, item in enumerate(items):
        queue.put((position, item))
    results = [None] * len(items)
    errors = []
    lock = Lock()
    workers = [Worker(function, queue, results, errors, lock)
               for _ in range(min(jobs, len(items)))]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()
    if errors:
        raise errors[0]
    return results
