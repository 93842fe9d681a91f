# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/7 15:10
# @Last Modified by: wqshen

import os
import json
import hashlib
from contextlib import contextmanager
from typing import Optional
from logzero import logger
from retrying import retry
from .settings import SETTINGS


class CacheLockedError(RuntimeError):
    """the cache lock file is held by another writer"""


def _is_lock_held(exception) -> bool:
    return isinstance(exception, FileExistsError)


class ReportCache(object):
    """one JSON document per job key in a directory

    Parameters
    ----------
    directory: str
        cache directory, created on first write
    format_version: int
        documents with another version are treated as missing
    """

    def __init__(self, directory: str, format_version: Optional[int] = None):
        self.directory = directory
        self.format_version = SETTINGS['cache_format_version'] if format_version is None else format_version
        self.lock_path = os.path.join(directory, '.lock')

    @staticmethod
    def key(**fields) -> str:
        text = json.dumps(fields, sort_keys=True, separators=(',', ':'))
        return hashlib.sha1(text.encode('utf-8')).hexdigest()

    def path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.json")

    def get(self, key: str) -> Optional[dict]:
        pathfile = self.path(key)
        if not os.path.exists(pathfile):
            return None
        with open(pathfile, 'r') as f:
            doc = json.load(f)
        if doc.get('format_version') != self.format_version:
            logger.info(f"ignoring cache entry {key} with format {doc.get('format_version')}")
            return None
        logger.debug(f"cache hit {pathfile}")
        return doc['payload']

    def put(self, key: str, payload: dict, job: Optional[dict] = None):
        os.makedirs(self.directory, exist_ok=True)
        doc = {'format_version': self.format_version, 'job': job or {}, 'payload': payload}
        with self.lock():
            tmp = self.path(key) + '.tmp'
            with open(tmp, 'w') as f:
                json.dump(doc, f, indent=2)
            os.replace(tmp, self.path(key))
        logger.debug(f"cache write {self.path(key)}")

    def lock_owner(self) -> Optional[int]:
        try:
            with open(self.lock_path, 'r') as f:
                return int(f.read().strip())
        except (FileNotFoundError, ValueError):
            return None

    def lock_is_stale(self) -> bool:
        """the lock names a process that no longer exists"""
        pid = self.lock_owner()
        if pid is None or pid == os.getpid():
            return False
        try:
            os.kill(pid, 0)
        except ProcessLookupError:
            return True
        except PermissionError:
            return False
        return False

    @retry(stop_max_attempt_number=20, wait_fixed=250, retry_on_exception=_is_lock_held)
    def _acquire(self):
        try:
            fd = os.open(self.lock_path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            if self.lock_is_stale():
                logger.warning(f"removing stale lock {self.lock_path} of pid {self.lock_owner()}")
                try:
                    os.remove(self.lock_path)
                except FileNotFoundError:
                    pass
            raise
        os.write(fd, str(os.getpid()).encode())
        os.close(fd)

    @contextmanager
    def lock(self):
        try:
            self._acquire()
        except FileExistsError:
            raise CacheLockedError(f"cache {self.directory} is locked by {self.lock_path}")
        try:
            yield
        finally:
            os.remove(self.lock_path)
