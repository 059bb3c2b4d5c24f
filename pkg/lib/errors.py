"""
Error types

InputError and CapExceededError are usage problems (CLI exit 2);
InconsistencyError and VerificationError mean an identity failed (exit 1).
"""


class HkqError(Exception):
    pass


class InputError(HkqError, ValueError):
    pass


class CapExceededError(InputError):
    def __init__(self, what, value, cap, env_var=None):
        self.what = what
        self.value = value
        self.cap = cap
        hint = f' (raise it with {env_var})' if env_var else ''
        super().__init__(f'{what}={value} exceeds the enumeration cap {cap}{hint}')


class InconsistencyError(HkqError):
    pass


class VerificationError(HkqError):
    def __init__(self, check, witness=None):
        self.check = check
        self.witness = witness
        msg = f'check failed: {check}'
        if witness is not None:
            msg += f' (witness: {witness})'
        super().__init__(msg)
