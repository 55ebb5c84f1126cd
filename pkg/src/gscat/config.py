from configparser import RawConfigParser
from dataclasses import dataclass, field
import os
import logging

from .errors import UsageError

log = logging.getLogger(__name__)


default_profile = {
    "cap": "65536",
    "max_instances": "4096",
    "samples": "200",
    "seed": "0",

    "apex_bound": "4",
    "closure_cap": "512",
    "pointwise_limit": "64",

    "sizes": "1,2,4",
    "format": "text",
    "exhaustive_only": "False",
}

_boolean_states = {'1': True, 'yes': True, 'true': True, 'on': True,
                   '0': False, 'no': False, 'false': False, 'off': False}

_integer_keys = ("cap", "max_instances", "samples", "seed", "apex_bound", "closure_cap", "pointwise_limit")


def parse_sizes(value):
    """
    Parse a size list such as ``"1,2,4"``.

    :param str value: comma-separated positive integers
    :return: the sizes in the order given, duplicates removed
    :rtype: tuple
    """
    if isinstance(value, (list, tuple)):
        items = value
    else:
        items = [v for v in str(value).replace(" ", "").split(",") if v]
    sizes = []
    for item in items:
        try:
            n = int(item)
        except (TypeError, ValueError):
            raise UsageError("Size {0!r} is not an integer".format(item))
        if n < 1:
            raise UsageError("Sizes must be positive, got {0}".format(n))
        if n not in sizes:
            sizes.append(n)
    if not sizes:
        raise UsageError("At least one size is required")
    return tuple(sizes)


@dataclass
class RunConfig:
    """Settings for one CLI run: profile values overridden by command-line flags."""
    subcommand: str = None
    action: str = None
    model: str = "finrel"
    monad: str = None
    sizes: tuple = (1, 2, 4)
    cap: int = 65536
    max_instances: int = 4096
    samples: int = 200
    seed: int = 0
    apex_bound: int = 4
    closure_cap: int = 512
    pointwise_limit: int = 64
    output_format: str = "text"
    order: str = "default"
    exhaustive_only: bool = False
    presentation: str = None
    fixtures: list = field(default_factory=list)

    def __post_init__(self):
        for key in _integer_keys:
            value = getattr(self, key)
            try:
                value = int(value)
            except (TypeError, ValueError):
                raise UsageError("{0} must be an integer, got {1!r}".format(key, value))
            if key != "seed" and value < 0:
                raise UsageError("{0} must not be negative".format(key))
            if key in ("cap", "max_instances", "samples", "pointwise_limit") and value == 0:
                raise UsageError("{0} must be positive".format(key))
            setattr(self, key, value)

        self.sizes = parse_sizes(self.sizes)

        if isinstance(self.exhaustive_only, str):
            self.exhaustive_only = _boolean_states.get(self.exhaustive_only.lower(), False)

        if self.output_format not in ("text", "json"):
            raise UsageError("Output format must be text or json, not {0}".format(self.output_format))

    @classmethod
    def from_profile(cls, profile, **overrides):
        settings = {
            "sizes": profile.get("sizes", default_profile["sizes"]),
            "output_format": profile.get("format", default_profile["format"]),
            "exhaustive_only": profile.get("exhaustive_only", default_profile["exhaustive_only"]),
        }
        for key in _integer_keys:
            settings[key] = profile.get(key, default_profile[key])
        settings.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(**settings)


class ConfigStoreFactory(object):

    @staticmethod
    def get_config_store(config_file=None):
        if config_file is None and any(os.environ.get("GSCAT_" + k.upper()) for k in default_profile):
            log.debug("Using envar config store")
            return EnvarConfigStore()
        else:
            log.debug("Using file config store")
            return FileConfigStore(config_file=config_file)


# A config store backed by os.environ rather than by a file on disk
class EnvarConfigStore(object):
    def __init__(self):
        # `GSCAT_CAP`, `GSCAT_SEED`, `GSCAT_SIZES`, ...
        environ = os.environ
        self.settings = dict(default_profile)
        for key in default_profile:
            value = environ.get("GSCAT_" + key.upper(), None)
            if value is not None:
                self.settings[key] = value

    def get_profile(self, profile=None):
        return dict(self.settings)

    def get_profiles(self):
        return ["default"]


class FileConfigStore(object):
    def __init__(self, config_file=None):
        self.config_search_path = [
            os.path.join(os.path.sep, "etc", "gscat", "gscat.conf"),
            os.path.join(os.path.expanduser("~"), ".gscat", "gscat.conf"),
            os.path.join(".", ".gscat", "gscat.conf"),
        ]

        if isinstance(config_file, str):
            self.config_search_path = [config_file]
        elif type(config_file) is list:
            self.config_search_path = config_file

        self.config = RawConfigParser(defaults=default_profile)
        self.config_files = self.config.read(self.config_search_path)

    def get_profile(self, profile=None):
        profile_name = profile or "default"
        if profile_name == "default" and profile_name not in self.get_profiles():
            return dict(default_profile)
        if profile_name not in self.get_profiles():
            raise UsageError("Cannot find profile '%s' after searching in these files: %s." %
                             (profile_name, ", ".join(self.config_search_path)))

        retval = {}
        for k in default_profile:
            retval[k] = self.config.get(profile_name, k)
        return retval

    def get_profiles(self):
        return self.config.sections()


def load_run_config(profile=None, config_file=None, **overrides):
    store = ConfigStoreFactory.get_config_store(config_file)
    return RunConfig.from_profile(store.get_profile(profile), **overrides)
