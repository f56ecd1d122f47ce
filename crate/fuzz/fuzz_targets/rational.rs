#![no_main]

use libfuzzer_sys::fuzz_target;

use superschur::linalg::{format_rational, parse_rational};

// Formatting a parsed value must parse back to the same rational.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(value) = parse_rational(text) {
        let again = parse_rational(&format_rational(&value)).expect("formatted rationals parse");
        assert_eq!(value, again);
    }
});
