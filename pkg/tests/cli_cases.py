"""Command lines covered by the golden files; run from the tests directory."""

CASES = {
    "analyze-lotka": ["analyze", "data/lotka.crn"],
    "analyze-lotka-network": ["analyze", "data/lotka-network.crn"],
    "analyze-fig3-flux": ["analyze", "data/fig3-flux.crn"],
    "analyze-fig3-at": ["analyze", "data/fig3-ma.crn", "--at", "1,2"],
    "analyze-fig1b": ["analyze", "data/fig1b.crn"],
    "check-fig1": ["check", "data/fig1a.crn", "data/fig1b.crn"],
    "check-fig1-lotka": ["check", "data/fig1a.crn", "data/lotka.crn"],
    "check-flux-self": ["check", "data/fig3-flux.crn", "data/fig3-flux.crn"],
    "realize-cb-flux-1111": ["realize-cb", "data/fig2a-flux-1111.crn"],
    "realize-cb-flux-6161": ["realize-cb", "data/fig2a-flux-6161.crn"],
    "realize-db-flux-1111": ["realize-db", "data/fig2a-flux-1111.crn"],
    "realize-cb-search-fig2a": ["realize-cb", "data/fig2a.crn"],
    "realize-cb-search-fig2a-26": ["realize-cb", "data/fig2a-26.crn"],
    "realize-cb-search-seed": ["realize-cb", "data/fig2a-26.crn", "--seed", "42", "--multistarts", "5"],
    "realize-cb-at-fig3": ["realize-cb", "data/fig3-ma.crn", "--at", "1,2"],
    "realize-cb-at-lotka": ["realize-cb", "data/lotka.crn", "--at", "1,1"],
    "realize-db-at-pair": ["realize-db", "data/pair-db.crn", "--at", "3,2"],
    "realize-wr-fig2a": ["realize-wr", "data/fig2a.crn"],
    "realize-rev-fig2a": ["realize-rev", "data/fig2a.crn"],
    "realize-wr-lotka": ["realize-wr", "data/lotka.crn"],
    "eliminate-line": ["eliminate", "data/line-cb.crn", "--vertex", "X"],
    "eliminate-fig1b-not-wr": ["eliminate", "data/fig1b.crn", "--vertex", "Y"],
    "error-missing-file": ["analyze", "data/no-such-file.crn"],
    "error-parse": ["analyze", "data/bad-weight.crn"],
    "error-db-needs-state": ["realize-db", "data/fig2a.crn"],
    "error-mode-mismatch": ["check", "data/fig3-flux.crn", "data/fig3-ma.crn"],
    "error-wr-on-flux": ["realize-wr", "data/fig3-flux.crn"],
    "error-bad-state": ["analyze", "data/lotka.crn", "--at", "1"],
    "error-nonpositive-state": ["analyze", "data/lotka.crn", "--at", "0,1"],
    "error-vertex-not-present": ["eliminate", "data/line-cb.crn", "--vertex", "3X"],
    "error-unknown-command": ["bogus"],
}

EXPECTED_EXIT = {
    "analyze-lotka": 0, "check-fig1": 0, "check-fig1-lotka": 1, "realize-cb-flux-1111": 0,
    "realize-cb-flux-6161": 1, "realize-cb-search-fig2a": 0, "realize-cb-search-fig2a-26": 2,
    "realize-cb-at-lotka": 1, "realize-wr-lotka": 1, "eliminate-line": 0, "eliminate-fig1b-not-wr": 64,
    "error-missing-file": 64, "error-parse": 65, "error-db-needs-state": 64, "error-mode-mismatch": 64,
    "error-wr-on-flux": 64, "error-bad-state": 64, "error-nonpositive-state": 65,
    "error-vertex-not-present": 64, "error-unknown-command": 64,
}
