#![no_main]

use libfuzzer_sys::fuzz_target;

// Every resolvable key yields a structurally valid algebra within the size
// cap; unresolvable text must error rather than panic.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(algebra) = superschur::catalog::resolve_key(text) {
        assert!(algebra.total_dim() <= superschur::catalog::MAX_KEY_DIM);
        assert!(algebra.validate().is_ok());
    }
});
