from contextlib import contextmanager

from django.conf import settings
from django.core.signals import setting_changed
from django.dispatch import receiver
from rest_framework.settings import APISettings

SETTINGS_NAME = 'SYMBOLIC_SHIFTS'

DEFAULTS = {
    # Horizon used by the command when --horizon is not given
    'DEFAULT_HORIZON': 16,

    # Maximum number of words or periodic points materialized at once
    'ENUMERATION_CAP': 10 ** 6,

    # Perron root: width of the Collatz-Wielandt bracket and iteration ceiling
    'PERRON_TOLERANCE': 1e-12,
    'PERRON_MAX_ITERATIONS': 100000,

    # Relative tolerance when comparing Perron roots of components
    'ENTROPY_TIE_TOLERANCE': 1e-9,

    # Added to the V^2 + 2 memory bound used by is_sft
    'SFT_MEMORY_BOUND_EXTRA': 0,

    # Binary precision (bits) for decimal β literals
    'BETA_START_PRECISION': 64,
    'BETA_MAX_PRECISION': 4096,
    'BETA_PRECISION_FACTOR': 2,

    # Longest first-return time searched for induced shifts
    'RETURN_TIME_CAP': 64,

    # Iteration ceiling for substitution languages
    'SUBSTITUTION_MAX_ITERATIONS': 40,

    # Command defaults for --depth and --tol
    'DEFAULT_DEPTH': 3,
    'DEFAULT_TOLERANCE': 1e-9,
}


class ShiftSettings(APISettings):
    """
    Reads the ``SYMBOLIC_SHIFTS`` dict lazily so that ``override_settings``
    and late configuration (the command-line entry point) are honoured.
    """

    @property
    def user_settings(self):
        if not hasattr(self, '_user_settings'):
            self._user_settings = getattr(settings, SETTINGS_NAME, {})
        return self._user_settings


shift_settings = ShiftSettings(None, DEFAULTS)


@receiver(setting_changed)
def reload_shift_settings(*args, **kwargs):
    if kwargs.get('setting') == SETTINGS_NAME:
        shift_settings.reload()


@contextmanager
def overridden(**values):
    """Apply per-run values (command-line flags) on top of ``SYMBOLIC_SHIFTS``."""
    merged = dict(shift_settings.user_settings, **values)
    shift_settings.reload()
    shift_settings._user_settings = merged
    try:
        yield shift_settings
    finally:
        shift_settings.reload()
