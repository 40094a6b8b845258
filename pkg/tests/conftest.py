import hypothesis

hypothesis.settings.register_profile(
    "bhthermo", max_examples=100, deadline=None, derandomize=True)
hypothesis.settings.load_profile("bhthermo")
