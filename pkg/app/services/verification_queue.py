# app/services/verification_queue.py
import redis
from rq import Queue

from app.core.config import settings

redis_conn = redis.from_url(settings.REDIS_URL)
verification_queue = Queue(settings.VERIFICATION_QUEUE, connection=redis_conn)
