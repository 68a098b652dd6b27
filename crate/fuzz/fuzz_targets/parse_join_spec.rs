#![no_main]

use hyperchrome::constructions::{hajos_join, HajosJoinSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = serde_json::from_slice::<HajosJoinSpec>(data) else { return };
    if let Ok(joined) = hajos_join(&spec) {
        assert_eq!(joined.graph.vertex_count(), spec.g1.vertex_count() + spec.g2.vertex_count() - 1);
        assert_eq!(joined.origin.len(), joined.graph.vertex_count());
        assert!(joined.graph.edge(joined.e_star).is_ok());
    }
});
