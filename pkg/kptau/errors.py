'''
Exceptions raised by kptau. All of them are ValueErrors so callers that only
care about bad input can catch one type.
'''


class CutoffError(ValueError):
    '''
    An operator would produce a variable q_k beyond the variable cutoff.
    '''


class NotInSubalgebraError(ValueError):
    '''
    An operator expected in D_- (all z-powers <= -1) is not.
    '''


class CalibrationError(ValueError):
    '''
    The fermionic mode convention could not be fixed, or was never fixed.
    '''


class ConventionError(ValueError):
    '''
    A verification convention failed its self-check.
    '''


class ConsistencyError(ValueError):
    '''
    Internal-consistency failure: an identity that must hold by construction
    did not.
    '''


class EngineError(ValueError):
    '''
    Invalid model, engine, or operator for the requested computation.
    '''
