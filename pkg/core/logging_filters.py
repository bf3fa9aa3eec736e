"""
Custom logging filters for the catalan-jacobsthal toolkit
"""
import logging
import uuid


def new_run_id():
    """Short id used to correlate the log lines of one sweep or check run."""
    return str(uuid.uuid4())[:8]


class SweepContextFilter(logging.Filter):
    """
    Add identity and run id information to log records
    """

    def filter(self, record):
        # Sweeps pass identity/run_id through ``extra=``
        if not hasattr(record, 'identity'):
            record.identity = '-'
        if not hasattr(record, 'run_id'):
            record.run_id = '-'

        return True
