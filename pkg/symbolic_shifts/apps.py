from django.apps import AppConfig
from django.core import checks
from django.utils.translation import gettext_lazy as _

INTEGER_SETTINGS = (
    'DEFAULT_HORIZON', 'ENUMERATION_CAP', 'PERRON_MAX_ITERATIONS', 'BETA_START_PRECISION',
    'BETA_MAX_PRECISION', 'BETA_PRECISION_FACTOR', 'RETURN_TIME_CAP', 'SUBSTITUTION_MAX_ITERATIONS',
    'DEFAULT_DEPTH',
)
TOLERANCE_SETTINGS = ('PERRON_TOLERANCE', 'ENTROPY_TIE_TOLERANCE', 'DEFAULT_TOLERANCE')


def validate_settings(app_configs, **kwargs):
    """
    Django system check for the SYMBOLIC_SHIFTS setting.
    Run via: python manage.py check
    """
    from .settings import shift_settings
    errors = []

    for name in INTEGER_SETTINGS:
        value = getattr(shift_settings, name)
        if not isinstance(value, int) or value < 1:
            errors.append(
                checks.Error(
                    _("%(name)s must be a positive integer.") % {'name': name},
                    hint=_("Fix SYMBOLIC_SHIFTS['%(name)s'] in your settings.") % {'name': name},
                    id='shifts.E001',
                )
            )

    for name in TOLERANCE_SETTINGS:
        value = getattr(shift_settings, name)
        if not isinstance(value, (int, float)) or not 0 < value < 1:
            errors.append(
                checks.Error(
                    _("%(name)s must lie strictly between 0 and 1.") % {'name': name},
                    id='shifts.E002',
                )
            )

    if shift_settings.BETA_MAX_PRECISION < shift_settings.BETA_START_PRECISION:
        errors.append(
            checks.Error(
                _("BETA_MAX_PRECISION is below BETA_START_PRECISION."),
                id='shifts.E003',
            )
        )

    if shift_settings.BETA_PRECISION_FACTOR < 2:
        errors.append(
            checks.Error(
                _("BETA_PRECISION_FACTOR must be at least 2."),
                hint=_("Precision escalation would never terminate."),
                id='shifts.E004',
            )
        )

    if shift_settings.ENUMERATION_CAP > 10 ** 8:
        errors.append(
            checks.Warning(
                _("ENUMERATION_CAP is very large."),
                hint=_("Languages and periodic points are held in memory; expect heavy memory use."),
                id='shifts.W001',
            )
        )

    return errors


class SymbolicShiftsConfig(AppConfig):
    name = 'symbolic_shifts'
    verbose_name = _("Symbolic Shifts")

    def ready(self):
        checks.register(validate_settings)
