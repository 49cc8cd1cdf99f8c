//! Neatness, `osp(1|2)`-triples and support scans.

mod scan;
mod triple;

pub use scan::{
    neat_cone_scan, neat_report, support_membership, support_scan, ConeReport, ConeSample,
    NeatReport, ScanConfig, SupportReport, SupportSample,
};
pub use triple::{
    chain_weight_multiset, deligne_on_algebra, integer_spectrum, jm_triple, neat_in_g,
    restriction_consistent, triple_homomorphism_defects, triple_images, triple_restriction,
    OspTriple,
};
