"""Exact-arithmetic engine for the Picard group of C4-equivariant Morava E-theory.

Everything is integer or GF(2) arithmetic: no floats anywhere.  The package is
organized around the pipeline

    repring / jimage   -- representation rings and the image-of-J lower bound
    coeff / emodule    -- truncated coefficient rings and C4-modules
    cohomology         -- periodic-resolution group cohomology, Mackey functors
    hfpss              -- the two-sheet additive homotopy fixed point SS
    units              -- unit groups, multiplicative H^1, Bockstein filtrations
    picss              -- the Picard spectral sequence and the final synthesis

`specseq.pipeline.run_pipeline` drives the whole computation.
"""

__version__ = "0.1.0"
