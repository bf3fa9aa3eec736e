"""
Django settings for the catalan-jacobsthal toolkit.

The project has no web surface and no persistence: it is a set of Django apps
driven through management commands (``python manage.py triangle ...``).
Settings only carry configuration, installed apps and logging.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

from base.env_config import get_env_variable, get_int_env_variable

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(f"{BASE_DIR}/.env")

# Only used by Django internals; nothing is signed or served.
SECRET_KEY = os.getenv('SECRET_KEY', 'catalan-jacobsthal-development-key')

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = ['localhost']

# Application definition

INSTALLED_APPS = [
    'core',
    'exactmath',
    'triangles',
    'polyfam',
    'genfun',
    'pathoracle',
    'oeisdata',
    'identities',
]

# All tables are computed in memory; the dummy backend is enough.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Toolkit configuration

OEIS_DATA_DIR = Path(get_env_variable('CATALAN_DATA_DIR', BASE_DIR / 'data'))

SWEEP_WORKERS = get_int_env_variable('SWEEP_WORKERS', 1)
if SWEEP_WORKERS < 1:
    raise ValueError(f"SWEEP_WORKERS must be a positive integer, got {SWEEP_WORKERS}")

PATH_ENUMERATION_LIMIT = get_int_env_variable('PATH_ENUMERATION_LIMIT', 24)

LOG_DIR = Path(get_env_variable('LOG_DIR', BASE_DIR / 'logs'))
LOG_DIR.mkdir(parents=True, exist_ok=True)

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {pathname}:{lineno} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'json': {
            'format': '{"level": "%(levelname)s", "time": "%(asctime)s", "module": "%(module)s", "lineno": %(lineno)d, "message": "%(message)s", "identity": "%(identity)s", "run_id": "%(run_id)s"}',
        },
    },
    'filters': {
        'add_sweep_context': {
            '()': 'core.logging_filters.SweepContextFilter',
        },
    },
    'handlers': {
        'file_general': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'general.log',
            'maxBytes': 1024*1024*10,  # 10MB
            'backupCount': 5,
            'formatter': 'verbose',
            'filters': ['add_sweep_context'],
        },
        'file_errors': {
            'level': 'ERROR',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'errors.log',
            'maxBytes': 1024*1024*10,  # 10MB
            'backupCount': 5,
            'formatter': 'verbose',
            'filters': ['add_sweep_context'],
        },
        'file_identities': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'identities.log',
            'maxBytes': 1024*1024*10,  # 10MB
            'backupCount': 5,
            'formatter': 'json',
            'filters': ['add_sweep_context'],
        },
        'file_oeisdata': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'oeisdata.log',
            'maxBytes': 1024*1024*10,  # 10MB
            'backupCount': 5,
            'formatter': 'json',
            'filters': ['add_sweep_context'],
        },
        'console': {
            # stderr, so command output on stdout stays machine-readable
            'level': 'DEBUG' if DEBUG else 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
            'filters': ['add_sweep_context'],
        },
    },
    'loggers': {
        'django': {
            'handlers': ['file_general', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'exactmath': {
            'handlers': ['file_general', 'file_errors', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'triangles': {
            'handlers': ['file_general', 'file_errors', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'polyfam': {
            'handlers': ['file_general', 'file_errors', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'genfun': {
            'handlers': ['file_general', 'file_errors', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'pathoracle': {
            'handlers': ['file_general', 'file_errors', 'console'],
            'level': 'INFO',
            'propagate': False,
        },
        'identities': {
            'handlers': ['file_identities', 'file_errors', 'console'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
        'oeisdata': {
            'handlers': ['file_oeisdata', 'file_errors', 'console'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
    },
    'root': {
        'handlers': ['file_general', 'console'],
        'level': 'INFO',
    },
}
