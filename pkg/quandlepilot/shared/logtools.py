import logging
import datetime

class NonRepetitiveLogger(logging.Logger):
    """Logger that drops a message identical to one logged recently
    
    The search driver logs one progress line per work unit, and a parallel
    search can produce the same line many times a second. Messages are 
    keyed by their text; a repeat within `wait_time` is dropped. At most
    `max_cached` texts are remembered, oldest forgotten first.
    """
    def __init__(self, name, level=logging.NOTSET, wait_seconds=5, max_cached=1000):
        super().__init__(name=name, level=level)
        
        # When each message was last emitted, keyed by hash of the text
        self._message_cache = {}
        self.wait_time = datetime.timedelta(seconds=wait_seconds)
        self.max_cached = max(1, int(max_cached))

    def _log(self, level, msg, args, exc_info=None, extra=None, stack_info=False):
        msg_hash = hash(msg)
        dt_now = datetime.datetime.now()

        # Drop it if it was emitted within wait_time
        last_time = self._message_cache.get(msg_hash)
        if last_time is not None and dt_now < last_time + self.wait_time:
            return

        # Oldest first, so re-insert at the end
        self._message_cache.pop(msg_hash, None)
        if len(self._message_cache) >= self.max_cached:
            self._forget(dt_now)
        self._message_cache[msg_hash] = dt_now
        super()._log(level, msg, args, exc_info, extra, stack_info)

    def _forget(self, dt_now):
        """Drop expired entries, then the oldest until there is room"""
        self._message_cache = {h: t for h, t in self._message_cache.items()
            if dt_now < t + self.wait_time}
        while len(self._message_cache) >= self.max_cached:
            del self._message_cache[next(iter(self._message_cache))]

# Loggers already set up, by name
_loggers = {}

def get_logger(name, level=logging.INFO, wait_seconds=5):
    """Return the NonRepetitiveLogger called `name`, creating it once
    
    The logger gets a StreamHandler with the '[%(levelname)s] - %(message)s'
    format. Calling this again with the same name returns the same logger
    (with its level updated) and does not stack handlers.
    
    Arguments
    ---------
    name : str
    level : int or str, e.g. logging.DEBUG or 'DEBUG'
    wait_seconds : numeric, repeat window of NonRepetitiveLogger
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    
    if name not in _loggers:
        logger = NonRepetitiveLogger(name, wait_seconds=wait_seconds)
        sh = logging.StreamHandler()
        sh.setFormatter(logging.Formatter('[%(levelname)s] - %(message)s'))
        logger.addHandler(sh)
        _loggers[name] = logger
    
    logger = _loggers[name]
    logger.setLevel(level)
    return logger
