"""PBW rewriting for divided powers of root vectors and highest-weight evaluation."""
