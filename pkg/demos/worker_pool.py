"""
Distributes the D_n catalogs over multiple worker processes.

Each worker takes an odd n from the job queue, computes the stable
annihilators of the D_n catalog, and reports the size of the closed-set
lattice along with the cl_2 transitivity failures. The boss process
collects the results as they come in and prints them in order of n.

The library can also parallelize a single catalog, see the `workers`
argument of `stann.load_catalog()`. Here the unit of work is the whole
catalog instead.
"""

########################################
# Dependencies                         #
########################################
import stann                           # stable annihilators
from multiprocessing import Process    # external subprocess
from multiprocessing import Queue      # inter-process queue
from multiprocessing import cpu_count  # number of (logical) cores
from queue import Empty                # queue-is-empty exception
from timeit import default_timer as now


########################################
# Workers                              #
########################################

def worker(jobs, results):
    """Performs jobs and delivers the results."""
    while True:
        try:
            n = jobs.get(block=False)
        except Empty:
            break
        t0 = now()
        space = stann.build_space(stann.load_catalog(f'D:{n}', workers=1))
        closed = len(stann.enumerate_closed_sets(space))
        failures = len(stann.find_cln_transitivity_failures(space, 2))
        results.put((n, len(space), closed, failures, now() - t0))


########################################
# Boss                                 #
########################################

def boss():
    """Hires workers, assigns jobs, and collects the results."""
    jobs = Queue()
    values = [5, 7, 9, 11]
    for n in values:
        jobs.put(n)

    results = Queue()
    processes = []
    for _ in range(min(cpu_count(), len(values))):
        process = Process(target=worker, args=(jobs, results))
        processes.append(process)
        process.start()

    rows = sorted(results.get() for _ in values)
    for process in processes:
        process.join()

    print(' n  points  closed sets  cl_2 failures  time')
    for (n, points, closed, failures, elapsed) in rows:
        print(f'{n:2}  {points:6}  {closed:11}  {failures:13}  {elapsed:.1f} s')


# Fence against module import. Needed so that subprocesses don't run boss().
if __name__ == '__main__':
    boss()
