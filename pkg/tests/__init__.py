# Tests package for lorentz-verifier
