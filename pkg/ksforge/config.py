"""Module for the settings of ksforge, read from the environment or a .env file"""

import logging
import os

from dotenv import load_dotenv

load_dotenv()

# constants
MATRIX_CAP = int(os.getenv('KSFORGE_MATRIX_CAP', '5'))
CATALOG_CAP = int(os.getenv('KSFORGE_CATALOG_CAP', '4'))
KERNEL_CAP = int(os.getenv('KSFORGE_KERNEL_CAP', '26'))
ASSIGNMENT_CAP = int(os.getenv('KSFORGE_ASSIGNMENT_CAP', '30'))
THREADS = max(1, int(os.getenv('KSFORGE_THREADS', '1')))
LOG_LEVEL = os.getenv('KSFORGE_LOG_LEVEL', 'INFO')

LOG_FORMAT = '[%(levelname)s] %(message)s'


def setup_logging(level: str = LOG_LEVEL) -> None:
    """Configures the root logger so messages read like `[INFO] building catalog`."""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT)
