"""Pure-Python segment composition kernel.

Reference implementation of the hot kernel; the compiled twin in
``_ckernel.pyx`` must agree with it bit for bit on every input it accepts.
Segments are (lo, hi, offset) triples sorted by lo, with float infinities
allowed at the outer ends.
"""


def compose_segments(a, b):
    """Segments of the composite map 'a then b', merged into canonical form."""
    out = []
    j = 0
    nb = len(b)
    for lo, hi, off in a:
        ilo = lo + off
        ihi = hi + off
        while j < nb and b[j][1] < ilo:
            j += 1
        k = j
        while k < nb and b[k][0] <= ihi:
            blo, bhi, boff = b[k]
            s_lo = ilo if ilo > blo else blo
            s_hi = ihi if ihi < bhi else bhi
            if s_lo <= s_hi:
                out.append((s_lo - off, s_hi - off, off + boff))
            k += 1
    merged = []
    for lo, hi, off in out:
        if merged:
            plo, phi, poff = merged[-1]
            if poff == off and phi + 1 == lo:
                merged[-1] = (plo, hi, poff)
                continue
        merged.append((lo, hi, off))
    return merged
