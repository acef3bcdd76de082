"""Code used by both the algebra workers and the search driver.

load_params.py
    Functions to load the JSON configuration in ../../config/.

logtools.py
    NonRepetitiveLogger and get_logger, which sets up the stream handler
    used everywhere in quandlepilot.

misc.py
    RepeatedTimer, used by the search driver for its progress heartbeat.

textio.py
    Readers and writers for the plain-text formats: quandle tables,
    modular matrices, Onoi rings and cocycles.
"""
