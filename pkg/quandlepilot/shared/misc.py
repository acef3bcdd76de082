import time
import threading

class RepeatedTimer(object):
    """Calls a function at regular intervals on a daemon thread
    
    The search driver uses this as a heartbeat: while a long search runs,
    it logs how many work units are done every `interval` seconds.
    
    https://stackoverflow.com/questions/474528/how-to-repeatedly-execute-a-function-every-x-seconds
    """
    def __init__(self, interval, function, *args, start=True, **kwargs):
        """Init a new RepeatedTimer that will call `function` every `interval`
        
        Arguments
        ---------
        interval : numeric, time in seconds
        function : method
            This method will be called every `interval` seconds
        start : bool
            If True, start immediately
        args, kwargs : passed to function
        """
        # Store arguments
        self.interval = interval
        self.function = function
        self.args = args
        self.kwargs = kwargs

        # Instance variables
        self._timer = None
        self._lock = threading.Lock()
        self.is_running = False
        self.stopped = False
        self.n_calls = 0
        self.next_call = time.time()
        
        if start:
            self.start()

    def _run(self):
        """The function that is called when _timer completes"""
        with self._lock:
            self.is_running = False
            if self.stopped:
                return
            self._schedule()
        
        self.n_calls += 1
        self.function(*self.args, **self.kwargs)

    def _schedule(self):
        # Drift-free: the next call is always a multiple of interval
        self.next_call += self.interval
        self._timer = threading.Timer(
            max(0, self.next_call - time.time()), self._run)
        self._timer.daemon = True
        self._timer.start()
        self.is_running = True

    def start(self):
        """Start the timer"""
        with self._lock:
            self.stopped = False
            if not self.is_running:
                self._schedule()

    def stop(self):
        """Cancel the timer; no further calls will be made"""
        with self._lock:
            self.stopped = True
            if self._timer is not None:
                self._timer.cancel()
            self.is_running = False
