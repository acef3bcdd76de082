"""Functions to load configuration parameters

load_defaults : Load the limits and seeds in config/defaults.json
load_search_params : Load a named search preset, merged over the defaults
"""

import json
import os

# Location of the config files
# This hardcodes ../../config/ from here
config_path = os.path.abspath(os.path.join(
    os.path.split(__file__)[0], 
    '..', 
    '..', 
    'config',
    ))

# Keys that every defaults.json must provide
REQUIRED_DEFAULTS = (
    'max_enumeration_order',
    'max_automorphism_group_order',
    'max_library_exponent',
    'max_search_k',
    'long_run_k',
    'random_seed',
    'span_samples',
    'progress_interval',
    'full_scan_max_order',
    'log_level',
    )

def simple_json_loader(path):
    """Simple loading function to return the JSON at `path`"""
    try:
        with open(path, 'r') as p:
            params = json.load(p)
    except json.decoder.JSONDecodeError as e:
        raise IOError(f'cannot load JSON at {path}; original exception:\n{e}')
    except FileNotFoundError:
        raise IOError(f'no config file at {path}')
    
    if not isinstance(params, dict):
        raise IOError(f'config at {path} must hold a JSON object')
    
    return params

def load_defaults(path=None):
    """Loads the default limits from `defaults.json` and returns
    
    The JSON has the following keys:
    * max_enumeration_order (int): largest group order for which groups
        are scanned element by element (automorphism enumeration, 
        brute-force bijectivity)
    * max_automorphism_group_order (int): largest |Aut(A)| for which
        conjugacy classes are computed by explicit conjugation
    * max_library_exponent (int): largest m accepted by build_library(2^m)
    * max_search_k (int): largest k accepted by search(k)
    * long_run_k (int): searches with k >= long_run_k need long_run=True
    * random_seed (int): seed for every sampled check
    * span_samples (int): number of random span elements per sampled check
    * progress_interval (float): seconds between search heartbeats
    * full_scan_max_order (int): largest order for which constructions run
        the full O(n^3) left-distributivity scan
    * log_level (str): level name for get_logger
    """
    if path is None:
        path = os.path.join(config_path, 'defaults.json')
    
    params = simple_json_loader(path)
    
    # Ensure every key is present
    for key in REQUIRED_DEFAULTS:
        if key not in params:
            raise IOError(f'defaults at {path} is missing entry "{key}"')
    
    return params

def load_search_params(name):
    """Loads search params from `config/search/name.json` and returns
    
    The preset is merged over defaults.json, so a preset only has to name
    what it changes. Keys specific to a search:
    * k (int): the target order is 2^k
    * jobs (int): number of worker processes
    * long_run (bool): permit k >= long_run_k
    * cross_check_lifting (bool): compare the Howell kernel with the 
        integer-lifting kernel on every system over Z/4 or larger
    * verify_witnesses (bool): rebuild every witness extension and check
        that it is a non-medial latin quandle
    """
    # Constructing the full path to the config file
    full_path = os.path.join(config_path, 'search', name + '.json')

    # Load the preset and merge it over the defaults
    preset = simple_json_loader(full_path)
    params = load_defaults()
    params.update(preset)
    
    # Ensure 'k' is present
    if 'k' not in preset:
        raise IOError(f'search params at {full_path} is missing entry "k"')
    
    # Set defaults for the search-only keys
    params.setdefault('jobs', 1)
    params.setdefault('long_run', False)
    params.setdefault('cross_check_lifting', False)
    params.setdefault('verify_witnesses', True)
    
    # Store the name
    params['name'] = name
    
    return params
