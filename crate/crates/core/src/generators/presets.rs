//! The configurations around a pentagon vertex `v` (always vertex 0) that survive the
//! angle count after subdivision: four pentagons, three pentagons plus a triangle, two
//! pentagons plus three triangles, one pentagon plus five triangles.
//!
//! `v_i` is vertex `i`.

use crate::complex::{build_tp_complex, TPComplex};

/// The distinguished vertex of every preset.
pub const HUB: usize = 0;

/// Four pentagons around `v`, consecutive ones sharing an edge.
pub fn gen_star4_pentagons() -> TPComplex {
    build_tp_complex(13, &[], &[[0, 1, 2, 3, 4], [0, 4, 5, 6, 7], [0, 7, 8, 9, 10], [0, 10, 11, 12, 1]])
        .expect("four-pentagon star is valid")
}

/// Three pentagons around `v` closed up by the triangle `(v, v_10, v_1)`.
pub fn gen_fan3_pentagons_triangle() -> TPComplex {
    build_tp_complex(11, &[[0, 10, 1]], &[[0, 1, 2, 3, 4], [0, 4, 5, 6, 7], [0, 7, 8, 9, 10]])
        .expect("three-pentagon fan is valid")
}

/// Two pentagons around `v` closed up by three triangles along `v_7 ~ v_8 ~ v_9 ~ v_1`.
pub fn gen_fan2_pentagons_3triangles() -> TPComplex {
    build_tp_complex(10, &[[0, 7, 8], [0, 8, 9], [0, 9, 1]], &[[0, 1, 2, 3, 4], [0, 4, 5, 6, 7]])
        .expect("two-pentagon fan is valid")
}

/// One pentagon at `v` closed up by five triangles along `v_4 ~ v_5 ~ ... ~ v_8 ~ v_1`.
pub fn gen_fan1_pentagon_5triangles() -> TPComplex {
    build_tp_complex(9, &[[0, 4, 5], [0, 5, 6], [0, 6, 7], [0, 7, 8], [0, 8, 1]], &[[0, 1, 2, 3, 4]])
        .expect("one-pentagon fan is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_cycles, euler_characteristic, interior_vertices};
    use std::collections::BTreeSet;

    #[test]
    fn presets_are_discs_with_interior_hub() {
        for x in [
            gen_star4_pentagons(),
            gen_fan3_pentagons_triangle(),
            gen_fan2_pentagons_3triangles(),
            gen_fan1_pentagon_5triangles(),
        ] {
            assert_eq!(euler_characteristic(&x), 1);
            assert_eq!(boundary_cycles(&x).unwrap().len(), 1);
            assert_eq!(interior_vertices(&x).unwrap(), BTreeSet::from([HUB]));
        }
    }

    #[test]
    fn star4_boundary_is_a_12_cycle() {
        let b = boundary_cycles(&gen_star4_pentagons()).unwrap();
        assert_eq!(b[0].vertices(), &(1..=12).collect::<Vec<_>>()[..]);
    }
}
