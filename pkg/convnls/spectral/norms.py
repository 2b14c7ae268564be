"""Inner products, norms and projective geometry on truncated spectra.

Notes
-----
All functions operate along the last axis of coefficient arrays, so that leading axes (for
example strip grid nodes) are batched.
"""

import numpy as np

from convnls.spectral.fields import as_coeffs

###################################################################################################
###################################################################################################

def compute_norm(field):
    """L2 norm, sqrt(2pi sum |c(n)|^2), of each field."""

    coeffs = as_coeffs(field)

    return np.sqrt(2 * np.pi * np.sum(coeffs.real ** 2 + coeffs.imag ** 2, axis=-1))


def inner_real(field_a, field_b):
    """Real L2 inner product, Re 2pi sum a(n) conj(b(n))."""

    coeffs_a, coeffs_b = as_coeffs(field_a), as_coeffs(field_b)

    return 2 * np.pi * np.sum(coeffs_a.real * coeffs_b.real + coeffs_a.imag * coeffs_b.imag,
                              axis=-1)


def inner_complex(field_a, field_b):
    """Hermitian L2 inner product, 2pi sum conj(a(n)) b(n), antilinear in the first slot."""

    return 2 * np.pi * np.sum(np.conj(as_coeffs(field_a)) * as_coeffs(field_b), axis=-1)


def symplectic_form(field_a, field_b):
    """Symplectic form omega(a, b) = <ia, b>."""

    return inner_real(1j * as_coeffs(field_a), field_b)


def normalize(field):
    """Scale each field to unit L2 norm.

    Raises
    ------
    ValueError
        If any of the fields is zero.
    """

    coeffs = as_coeffs(field)
    norms = compute_norm(coeffs)

    if np.any(norms == 0):
        raise ValueError('The zero field cannot be normalized.')

    return coeffs / norms[..., None]


def tangent_projection(base, field):
    """Remove the components of a field along base and i * base.

    Parameters
    ----------
    base : ndarray
        Nonzero base point(s) u, broadcastable against field.
    field : ndarray
        Vector(s) to project.

    Returns
    -------
    projected : ndarray
        The component of field orthogonal to span_R{u, iu}, which represents a tangent vector
        of complex projective space at [u].
    """

    base, field = as_coeffs(base), as_coeffs(field)
    base_sq = np.sum(base.real ** 2 + base.imag ** 2, axis=-1)[..., None] * 2 * np.pi

    along = inner_real(field, base)[..., None] / base_sq
    across = inner_real(field, 1j * base)[..., None] / base_sq

    return field - along * base - across * (1j * base)


def projective_distance(field_a, field_b):
    """Fubini-Study distance arccos(|<a, b>| / (|a| |b|)) between the lines of two fields."""

    overlap = np.abs(inner_complex(field_a, field_b))
    scale = compute_norm(field_a) * compute_norm(field_b)

    return np.arccos(np.clip(overlap / scale, 0., 1.))


def align_phase(field, reference):
    """Rotate field by a global phase so that <reference, field> is real and non-negative.

    Fields orthogonal to the reference are returned unchanged.
    """

    coeffs = as_coeffs(field)
    overlap = np.asarray(inner_complex(reference, coeffs))

    size = np.abs(overlap)
    phase = np.where(size > 0, np.conj(overlap) / np.where(size > 0, size, 1.), 1.)

    return coeffs * phase[..., None]
