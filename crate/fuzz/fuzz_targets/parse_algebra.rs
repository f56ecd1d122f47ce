#![no_main]

use libfuzzer_sys::fuzz_target;

// Anything that parses must survive an emit/parse round trip with the same
// structure constants.  Parsing is permissive (validation is a separate
// step), so this also covers files that violate the algebra axioms.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = superschur::format::parse_algebra_file(text) else {
        return;
    };
    let emitted = superschur::format::emit_algebra(&file.algebra);
    let reparsed = superschur::format::parse_algebra(&emitted).expect("emitted files parse");
    assert!(reparsed.structure_equal(&file.algebra));
});
