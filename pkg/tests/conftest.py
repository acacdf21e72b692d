import pytest

import friezelab as fl

PX = 64
COPIES = 2


@pytest.fixture(scope="session")
def flag_motif():
    return fl.asymmetric_flag_motif()


@pytest.fixture(scope="session")
def tag_rasters(flag_motif):
    """One rasterized two-period frieze per type, from the asymmetric motif."""
    out = {}
    for tag in fl.TypeTag:
        g = fl.standard_group(tag, flag_motif.cell_width, 0)
        out[tag] = fl.rasterize(fl.generate(flag_motif, g, COPIES), PX)
    return out
