"""
Stand-alone entry point: ``shifts <command> ...`` without a Django project.
"""
import sys
from typing import List, Optional

import django
from django.conf import settings

STANDALONE_SETTINGS = {
    'INSTALLED_APPS': ['rest_framework', 'symbolic_shifts'],
    'USE_I18N': False,
    'SYMBOLIC_SHIFTS': {},
    'LOGGING': {
        'version': 1,
        'disable_existing_loggers': False,
        'handlers': {'stderr': {'class': 'logging.StreamHandler'}},
        'loggers': {'symbolic_shifts': {'handlers': ['stderr'], 'level': 'WARNING'}},
    },
}


def configure() -> None:
    if not settings.configured:
        settings.configure(**STANDALONE_SETTINGS)
    django.setup()


def main(argv: Optional[List[str]] = None) -> int:
    configure()
    from .management.commands.shifts import Command

    argv = sys.argv[1:] if argv is None else list(argv)
    Command().run_from_argv(['shifts', 'shifts'] + argv)
    return 0


if __name__ == '__main__':
    sys.exit(main())
