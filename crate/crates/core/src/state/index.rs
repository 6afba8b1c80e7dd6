//! Mixed-radix index bookkeeping for grouped subsystems.

/// Splits a linear basis index over `full_dims` into the indices of disjoint
/// subsystem groups plus the leftover "rest" group.
///
/// Group positions are given in the significance order wanted for the group
/// index (first position = most significant digit). The rest group collects
/// all remaining positions in layout order and is reported last.
#[derive(Debug, Clone)]
pub(crate) struct GroupSplit {
    parts: Vec<Part>,
    comp_dims: Vec<usize>,
}

#[derive(Debug, Clone)]
struct Part {
    full_stride: usize,
    dim: usize,
    comp: usize,
    comp_stride: usize,
}

impl GroupSplit {
    pub fn new(full_dims: &[usize], groups: &[&[usize]]) -> Self {
        let n = full_dims.len();
        let mut assigned = vec![usize::MAX; n];
        for (g, positions) in groups.iter().enumerate() {
            for &p in *positions {
                assert!(assigned[p] == usize::MAX, "position {p} in two groups");
                assigned[p] = g;
            }
        }
        let rest: Vec<usize> = (0..n).filter(|&p| assigned[p] == usize::MAX).collect();

        let mut full_strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            full_strides[i] = full_strides[i + 1] * full_dims[i + 1];
        }

        let n_comp = groups.len() + 1;
        let mut comp_dims = vec![1usize; n_comp];
        let mut parts = Vec::with_capacity(n);
        let mut push_group = |positions: &[usize], comp: usize, parts: &mut Vec<Part>| {
            let mut comp_strides = vec![1usize; positions.len()];
            for i in (0..positions.len().saturating_sub(1)).rev() {
                comp_strides[i] = comp_strides[i + 1] * full_dims[positions[i + 1]];
            }
            for (i, &p) in positions.iter().enumerate() {
                parts.push(Part {
                    full_stride: full_strides[p],
                    dim: full_dims[p],
                    comp,
                    comp_stride: comp_strides[i],
                });
                comp_dims[comp] *= full_dims[p];
            }
        };
        for (g, positions) in groups.iter().enumerate() {
            push_group(positions, g, &mut parts);
        }
        push_group(&rest, groups.len(), &mut parts);

        GroupSplit { parts, comp_dims }
    }

    /// Dimension of each component; the rest group is the last entry.
    pub fn comp_dims(&self) -> &[usize] {
        &self.comp_dims
    }

    /// Decomposes a full linear index into component indices.
    pub fn decompose(&self, full: usize, out: &mut [usize]) {
        out.fill(0);
        for part in &self.parts {
            let digit = (full / part.full_stride) % part.dim;
            out[part.comp] += digit * part.comp_stride;
        }
    }

    /// Recombines component indices into the full linear index.
    pub fn compose(&self, comps: &[usize]) -> usize {
        let mut full = 0;
        for part in &self.parts {
            let digit = (comps[part.comp] / part.comp_stride) % part.dim;
            full += digit * part.full_stride;
        }
        full
    }
}

/// Digits of `linear` over `dims`, first subsystem most significant.
pub(crate) fn digits_of(mut linear: usize, dims: &[usize], out: &mut [usize]) {
    for i in (0..dims.len()).rev() {
        out[i] = linear % dims[i];
        linear /= dims[i];
    }
}

/// Linear index of `digits` over `dims`.
pub(crate) fn linear_of(digits: &[usize], dims: &[usize]) -> usize {
    let mut linear = 0;
    for (d, dim) in digits.iter().zip(dims) {
        linear = linear * dim + d;
    }
    linear
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_roundtrip() {
        let dims = [2, 3, 2, 4];
        let split = GroupSplit::new(&dims, &[&[2, 0], &[3]]);
        assert_eq!(split.comp_dims(), &[4, 4, 3]);
        let total: usize = dims.iter().product();
        let mut comps = [0usize; 3];
        for full in 0..total {
            split.decompose(full, &mut comps);
            assert!(comps[0] < 4 && comps[1] < 4 && comps[2] < 3);
            assert_eq!(split.compose(&comps), full);
        }
    }

    #[test]
    fn digits_roundtrip() {
        let dims = [3, 2, 5];
        let mut d = [0usize; 3];
        for linear in 0..30 {
            digits_of(linear, &dims, &mut d);
            assert_eq!(linear_of(&d, &dims), linear);
        }
    }

    #[test]
    fn group_significance_order() {
        // group (2, 0) means position 2 is the most significant group digit
        let dims = [2, 2, 2];
        let split = GroupSplit::new(&dims, &[&[2, 0]]);
        let mut comps = [0usize; 2];
        // |101⟩ -> full index 5; group digit = (pos2=1, pos0=1) -> 3; rest (pos1=0)
        split.decompose(5, &mut comps);
        assert_eq!(comps, [3, 0]);
    }
}
