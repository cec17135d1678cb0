//! The lines of PG(3,2) form a 35-vertex graph. Switching the seven lines
//! of a plane with a permutation that is not a collineation gives a
//! cospectral mate with maximal 4-cliques, which the original lacks.
//!
//! ```text
//! cargo run --example q_triangular_mates
//! ```

use design_switching::classify::design_automorphism_group;
use design_switching::geometry::{self, isomorphic, ProjectiveSpace};
use design_switching::perm::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = ProjectiveSpace::new(2, 4)?;
    let g = geometry::q_triangular(&space)?;
    println!("J_2(4,2): {} vertices, degree {}", g.order(), g.degree(0));

    let sites = geometry::subplane_sites(&space, &g)?;
    let site = &sites[0];
    println!("{} planes; plane 0 has lines {:?}", sites.len(), site.site.members);

    let collineations = design_automorphism_group(&site.dual);
    for text in ["(1 2 3)(4 5 6)", "(3 4)(5 6 7)"] {
        let pi = Permutation::parse_cycles(text, 7)?;
        let (h, cert) = geometry::switch_plane(site, &pi, 2)?;
        println!(
            "{text:>14}: collineation {}, cospectral {}/{}, maximal 4-cliques {}, isomorphic {}",
            collineations.contains(&pi),
            cert.cospectral,
            cert.complement_cospectral,
            cert.clique_witness.len(),
            isomorphic(&g, &h)?
        );
    }

    let q3 = geometry::q_triangular(&ProjectiveSpace::new(3, 4)?)?;
    println!("J_3(4,2): {} vertices, degree {}", q3.order(), q3.degree(0));
    Ok(())
}
