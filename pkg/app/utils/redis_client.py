"""Optional Redis client backing the shared memo table."""

from typing import Optional

import redis

from app.core.config import Config
from app.core.logger import logger

_client: Optional["redis.Redis"] = None
_tried = False


def get_redis() -> Optional["redis.Redis"]:
    """Connect once when REDIS_URL is set; None means the in-memory table is used."""
    global _client, _tried
    if _tried:
        return _client
    _tried = True
    if not Config.REDIS_URL:
        return None
    try:
        client = redis.from_url(Config.REDIS_URL, decode_responses=True)
        client.ping()
        _client = client
        logger.info("[cache] connected to Redis via URL: %s", Config.REDIS_URL)
    except Exception as e:
        logger.warning("[cache] Redis URL connection failed, using memory: %s", e)
        _client = None
    return _client
