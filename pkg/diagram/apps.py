from django.apps import AppConfig


class DiagramConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "diagram"
    verbose_name = "Long virtual knot diagrams"
