import json
import threading
from typing import Any, Optional

from app.core.config import Config
from app.core.logger import logger
from app.utils.redis_client import get_redis

# in-memory table; the lock makes check-then-set atomic across threads
_mem: dict[str, str] = {}
_LOCK = threading.Lock()
PREFIX = "qcubes:"


def get_json(key: str) -> Optional[Any]:
    client = get_redis()
    if client:
        try:
            raw = client.get(PREFIX + key)
            return json.loads(raw) if raw else None
        except Exception as e:
            logger.warning("[cache] Redis read failed for %s, using memory: %s", key, e)
    with _LOCK:
        raw = _mem.get(key)
    if raw:
        logger.debug("[cache] hit %s", key)
    return json.loads(raw) if raw else None


def set_json(key: str, value: Any, ex: Optional[int] = None) -> None:
    raw = json.dumps(value)
    client = get_redis()
    if client:
        try:
            client.set(PREFIX + key, raw, ex=ex or Config.CACHE_TTL)
            return
        except Exception as e:
            logger.warning("[cache] Redis write failed for %s, using memory: %s", key, e)
    with _LOCK:
        _mem.setdefault(key, raw)


def clear() -> None:
    with _LOCK:
        _mem.clear()


def size() -> int:
    with _LOCK:
        return len(_mem)
