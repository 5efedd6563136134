import logging
import threading
from typing import Any, Callable, Dict, List, NamedTuple

from apscheduler.events import EVENT_JOB_ERROR, EVENT_JOB_EXECUTED, EVENT_JOB_MISSED, JobExecutionEvent
from apscheduler.executors.pool import ThreadPoolExecutor
from apscheduler.jobstores.memory import MemoryJobStore
from apscheduler.schedulers.background import BackgroundScheduler

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.VerificationReport import VerificationReport

logger = logging.getLogger(__name__)


class CheckJob(NamedTuple):
    name: str
    model: Dict[str, Any]
    run: Callable[[], VerificationReport]


class CheckRunner:
    """
    Runs independent check jobs, concurrently on a background scheduler when more than one thread is
    configured. Reports come back in submission order whatever the completion order.
    """

    def __init__(self, threads: int = 1):
        if threads is None or threads < 1:
            raise ConfigError(f'Invalid value [threads={threads}]')
        self._threads = threads

    @property
    def threads(self) -> int:
        return self._threads

    def run(self, jobs: List[CheckJob]) -> List[VerificationReport]:
        if self._threads == 1 or len(jobs) <= 1:
            return [self._run_inline(job) for job in jobs]
        return self._run_scheduled(jobs)

    def _run_inline(self, job: CheckJob) -> VerificationReport:
        logger.debug(f'Running check [{job.name}]')
        try:
            return job.run()
        except Exception as e:
            logger.exception(e)
            return self._failed_report(job, e)

    def _failed_report(self, job: CheckJob, error: BaseException) -> VerificationReport:
        report = VerificationReport(job.name, job.model, 0.0)
        report.fail(f'Check raised {type(error).__name__}: {error}')
        return report

    def _run_scheduled(self, jobs: List[CheckJob]) -> List[VerificationReport]:
        results: Dict[str, VerificationReport] = {}
        finished = threading.Condition()
        by_id = {f'check-{position}': job for position, job in enumerate(jobs)}

        def listener(event: JobExecutionEvent):
            job = by_id.get(event.job_id)
            if job is None:
                return

            if event.code == EVENT_JOB_EXECUTED:
                report = event.retval
            elif event.code == EVENT_JOB_ERROR:
                logger.exception(event.exception)
                report = self._failed_report(job, event.exception)
            else:
                report = self._failed_report(job, RuntimeError('Job missed its run time'))

            with finished:
                results[event.job_id] = report
                finished.notify_all()

        scheduler = BackgroundScheduler(
            jobstores={
                'default': MemoryJobStore()
            },
            executors={
                'default': ThreadPoolExecutor(self._threads)
            },
            job_defaults={
                'max_instances': 1,
                'misfire_grace_time': None,
            }
        )
        scheduler.add_listener(listener, EVENT_JOB_EXECUTED | EVENT_JOB_ERROR | EVENT_JOB_MISSED)
        scheduler.start()

        try:
            for job_id, job in by_id.items():
                logger.debug(f'Scheduling check [{job.name}, id={job_id}]')
                scheduler.add_job(job.run, 'date', id=job_id)

            with finished:
                finished.wait_for(lambda: len(results) == len(jobs))
        finally:
            scheduler.shutdown(wait=True)

        return [results[job_id] for job_id in by_id]
