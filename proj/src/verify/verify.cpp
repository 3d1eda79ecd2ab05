namespace ghal {}
