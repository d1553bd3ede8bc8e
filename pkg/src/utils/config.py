# config.py
class Defaults:
    APP_NAME = "cdpcount"
    APP_VERSION = "1.0"

    # Counting engine
    NODE_CAP = 10_000_000
    DEFAULT_STRATEGY = "max-degree-shortest-clause"
    COMPONENTS = True
    ABSORB = False

    # Oracles
    ORACLE_CAP = 25  # brute force refuses n above this
    STATEVECTOR_CAP = 20

    # Numerics
    FLOAT_TOLERANCE = 1e-9
    OUTPUT_DIGITS = 12

    LOG_LEVEL = "WARNING"

    # Bounds explorer
    EXPLORER_MAX_DENSITY = 3.0
    EXPLORER_GRID_POINTS = 121


def load_solver_config():
    solver_config = dict()
    solver_config['strategy'] = Defaults.DEFAULT_STRATEGY
    solver_config['components'] = Defaults.COMPONENTS
    solver_config['absorb'] = Defaults.ABSORB
    solver_config['node_cap'] = Defaults.NODE_CAP
    return solver_config


def load_oracle_config():
    oracle_config = dict()
    oracle_config['cap'] = Defaults.ORACLE_CAP
    oracle_config['statevector_cap'] = Defaults.STATEVECTOR_CAP
    oracle_config['tolerance'] = Defaults.FLOAT_TOLERANCE
    return oracle_config


def load_circuit_config():
    circuit_config = dict()
    circuit_config['bra'] = None  # None means |+>^n
    circuit_config['ket'] = None
    circuit_config['statevector_cap'] = Defaults.STATEVECTOR_CAP
    circuit_config['tolerance'] = Defaults.FLOAT_TOLERANCE
    return circuit_config
