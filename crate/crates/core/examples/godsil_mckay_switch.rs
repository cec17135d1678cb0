//! Plants a Godsil-McKay site in a random graph, switches it, and checks
//! that the two graphs are cospectral (and so are their complements).
//!
//! ```text
//! cargo run --example godsil_mckay_switch
//! ```

use design_switching::catalog;
use design_switching::graph::emit_graph6;
use design_switching::switching::{apply_switch, cospectral, verify_site, SiteMode, SwitchSite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gm = catalog::get("GM(4)")?.scheme;
    println!("GM(4):\n{}", gm.matrix().to_scaled_string());

    let site = catalog::plant_site(14, &gm, 2024)?;
    let report = verify_site(&site, &gm, SiteMode::Relaxed);
    println!("site {:?} valid: {}", site.members, report.ok);

    let switched = apply_switch(&site, &gm)?;
    println!("before: {}", emit_graph6(&site.graph));
    println!("after:  {}", emit_graph6(&switched));
    println!("edges {} -> {}", site.graph.edge_count(), switched.edge_count());
    println!("cospectral: {}", cospectral(&site.graph, &switched)?);
    println!("complements cospectral: {}", cospectral(&site.graph.complement(), &switched.complement())?);

    // GM switching is an involution.
    let back = apply_switch(&SwitchSite::new(switched, site.members.clone())?, &gm)?;
    println!("switching twice restores the graph: {}", back == site.graph);
    Ok(())
}
