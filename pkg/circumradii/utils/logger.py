"""Logging setup for circumradii package."""

import logging

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger("circumradii")
