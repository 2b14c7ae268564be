"""Records of refined projective fixed points."""

from convnls.spectral.fields import FourierField
from convnls.spectral.io import field_to_json
from convnls.spectral.norms import inner_complex

###################################################################################################
###################################################################################################

FLAG_NOT_CERTIFIED = 'separation not certified'
FLAG_TRIVIAL = 'trivial-coincident'


class FixedPointRecord:
    """A projective fixed point of the time-one map, with its provenance.

    Attributes
    ----------
    u : FourierField
        Unit representative.
    n : int or None
        Asymptotic mode of the strip the point was extracted from.
    residual : float
        Fixed point residual ||phi_1(u) - lambda u||.
    multiplier : complex
        Unit multiplier lambda = <u, phi_1(u)> / |<u, phi_1(u)>|.
    action : float or None
        Action at the extraction slice plus the drift of refinement.
    action_slice : float or None
        Strip action at the extraction slice.
    action_drift : float
        Change of the Hamiltonian term of the action between candidate and refined point.
    T_source : float or None
        Cut-off parameter of the strip the candidate came from.
    displacement : float
        Projective distance between candidate and refined point.
    iterations : int
        Number of Newton iterations.
    distinct_from_trivial : bool
        False if the point coincides with a trivial fixed point u0_m with psi(m) = 0.
    flags : list of str
        Catalog flags.
    """

    def __init__(self, u, residual, multiplier, n=None, action_slice=None, action_drift=0.,
                 T_source=None, displacement=0., iterations=0):

        self.u = u if isinstance(u, FourierField) else FourierField(u)
        self.residual = float(residual)
        self.multiplier = complex(multiplier)
        self.n = n
        self.action_slice = action_slice
        self.action_drift = float(action_drift)
        self.T_source = T_source
        self.displacement = float(displacement)
        self.iterations = int(iterations)
        self.distinct_from_trivial = True
        self.flags = []


    def __repr__(self):

        return 'FixedPointRecord(n={}, action={}, residual={:.3g})'.format(
            self.n, self.action, self.residual)


    @property
    def action(self):

        if self.action_slice is None:
            return None

        return self.action_slice + self.action_drift


    def add_flag(self, flag):

        if flag not in self.flags:
            self.flags.append(flag)


    def to_dict(self):
        """Catalog entry with keys 'n', 'action', 'residual', 'lambda', 'coeffs' and 'flags'."""

        return {'n': self.n, 'action': self.action, 'residual': self.residual,
                'lambda': [self.multiplier.real, self.multiplier.imag],
                'coeffs': field_to_json(self.u)['coeffs'], 'flags': list(self.flags),
                'T_source': self.T_source, 'displacement': self.displacement,
                'distinct_from_trivial': self.distinct_from_trivial}


    def to_series(self):
        """Scalar fields of the record, for tabulating catalogs."""

        return {'n': self.n, 'action': self.action, 'action_slice': self.action_slice,
                'action_drift': self.action_drift, 'residual': self.residual,
                'multiplier_re': self.multiplier.real, 'multiplier_im': self.multiplier.imag,
                'multiplier_abs': abs(self.multiplier), 'T_source': self.T_source,
                'displacement': self.displacement, 'iterations': self.iterations,
                'distinct_from_trivial': self.distinct_from_trivial,
                'flags': ';'.join(self.flags)}


def multiplier_of(field, mapped):
    """Unit multiplier <u, phi_1(u)> / |<u, phi_1(u)>|, and the unnormalized overlap."""

    overlap = complex(inner_complex(field, mapped))

    if overlap == 0:
        raise ValueError('The image is orthogonal to the field, no multiplier exists.')

    return overlap / abs(overlap), overlap
