from hypothesis import settings

# numerical examples can be slow to warm up on a loaded machine
settings.register_profile("numeric", deadline=None)
settings.load_profile("numeric")
