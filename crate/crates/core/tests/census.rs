use std::collections::BTreeMap;

use linepat_core::lattice::{coprime_count, grid};
use linepat_core::Subdivision;

// (n, triangles, quadrilaterals, unbounded faces, vertices)
const GRID_CENSUS: [(u32, usize, usize, usize, usize); 4] =
    [(1, 12, 1, 16, 16), (2, 92, 61, 48, 132), (3, 364, 289, 96, 520), (4, 988, 893, 160, 1468)];

#[test]
fn grid_census_is_frozen() {
    for (n, tri, quad, unbounded, verts) in GRID_CENSUS {
        let sub = Subdivision::build(&grid(n));
        assert_eq!(sub.census(), BTreeMap::from([(3, tri), (4, quad)]), "grid {n}");
        assert_eq!(sub.unbounded_faces().len(), unbounded, "grid {n}");
        assert_eq!(sub.vertices().len(), verts, "grid {n}");
        assert!(sub.euler_holds());
    }
}

#[test]
fn two_sided_regions_match_coprime_count() {
    for (n, want) in [(1, 8), (2, 16), (3, 32), (4, 48)] {
        let sub = Subdivision::build(&grid(n));
        assert_eq!(coprime_count(n), want);
        assert_eq!(sub.two_sided_unbounded_count() as u64, coprime_count(n), "grid {n}");
    }
}
