"""
Django settings for the vknot project.
"""

import os

DEBUG = False

# in-memory services behind a management command, nothing is stored
INSTALLED_APPS = [
    "rest_framework",
    "laurent",
    "diagram",
    "surface",
    "invariants",
    "tangle",
    "construct",
    "cli",
]


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": ["rest_framework.renderers.JSONRenderer"],
    "UNICODE_JSON": False,
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
    "UNAUTHENTICATED_USER": None,
}


# Logging
# stdout belongs to command output, every record goes to stderr

VKNOT_LOG_LEVEL = os.environ.get("VKNOT_LOG_LEVEL", "WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": VKNOT_LOG_LEVEL, "propagate": False}
        for app in ("laurent", "diagram", "surface", "invariants", "tangle", "construct", "cli", "exceptions")
    },
}


# Fuzzer and construction limits, read by the vknot command only

VKNOT_FUZZ_SEED = 42
VKNOT_FUZZ_ITERATIONS = 1000
VKNOT_FUZZ_MAX_CROSSINGS = 12
VKNOT_FUZZ_MAX_MOVES = 20
VKNOT_FUZZ_PAIRS = 200
VKNOT_RELOCATION_CROSSING_LIMIT = 50000
