"""Pytest wiring: configure Django the same way run_tests.py does."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'base.settings')
django.setup()
