# symquandle test suite
