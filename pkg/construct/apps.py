from django.apps import AppConfig


class ConstructConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "construct"
    verbose_name = "Example families and realizations"
