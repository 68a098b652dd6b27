#![no_main]

use hyperchrome::classifier::HkCertificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(cert) = serde_json::from_slice::<HkCertificate>(data) else { return };
    if let Ok(g) = cert.replay() {
        assert!(cert.verify(&g).expect("a replayable certificate replays again"));
    }
});
