from django.dispatch import Signal

# Sent by the shifts command after a report is rendered
report_emitted = Signal()  # args: [command, report]
