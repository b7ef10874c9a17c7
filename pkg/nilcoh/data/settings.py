"""
Runtime settings resolved from the environment and an optional .env file.
"""

import logging
import os

from dotenv import load_dotenv

from ..errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CAPS = {
    'weyl': 2000,
    'exterior': 14,
    'group': 100000,
    'algebra': 700,
}


class Settings:
    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(Settings, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self, caps=None, allow_exceptional=None, jobs=None):
        if self._initialized:
            return

        load_dotenv()

        self.caps = dict(DEFAULT_CAPS)
        self.caps.update(self._parse_caps(os.environ.get('NILCOH_CAP', '')))
        if caps:
            self.caps.update(caps)

        if allow_exceptional is None:
            flag = os.environ.get('NILCOH_ALLOW_EXCEPTIONAL', '')
            allow_exceptional = flag.strip().lower() in ('1', 'true', 'yes', 'on')
        self.allow_exceptional = allow_exceptional

        if jobs is None:
            jobs = self._parse_int('NILCOH_JOBS', os.environ.get('NILCOH_JOBS', '1'))
        self.jobs = max(1, jobs)

        logger.debug("Settings resolved: caps=%s exceptional=%s jobs=%d",
                     self.caps, self.allow_exceptional, self.jobs)
        self._initialized = True

    @classmethod
    def reset(cls):
        """Forget the cached instance so the next call re-reads the environment"""
        cls._instance = None

    @staticmethod
    def _parse_int(name, text):
        try:
            return int(str(text).strip())
        except ValueError:
            raise ConfigError(f"{name} must be an integer, got '{text}'")

    @classmethod
    def _parse_caps(cls, text):
        """
        Parse NILCOH_CAP.

        Parameters:
        text (str): 'key=value,...' or a bare integer for the group cap

        Returns:
        dict: Cap overrides
        """
        text = text.strip()
        if not text:
            return {}
        if '=' not in text:
            return {'group': cls._parse_int('NILCOH_CAP', text)}

        overrides = {}
        for item in text.split(','):
            if not item.strip():
                continue
            key, _, value = item.partition('=')
            key = key.strip().lower()
            if key not in DEFAULT_CAPS:
                raise ConfigError(f"Unknown cap '{key}' in NILCOH_CAP; known: {', '.join(sorted(DEFAULT_CAPS))}")
            overrides[key] = cls._parse_int(f"NILCOH_CAP[{key}]", value)
        return overrides

    def cap(self, name):
        return self.caps[name]

    def to_dict(self):
        return {
            'caps': dict(self.caps),
            'allow_exceptional': self.allow_exceptional,
            'jobs': self.jobs,
        }
