from django.apps import AppConfig


class TangleConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "tangle"
    verbose_name = "Virtual 2-string tangles"
