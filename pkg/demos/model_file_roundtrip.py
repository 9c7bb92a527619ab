"""Write a model to its text format, read it back, and verify it.

The text format is line oriented: a surface line, class lines with
integer coordinates, optional fibre blocks and an effective list.
Serialization and parsing are exact inverses on the data they carry, so
models can be stored in version control and rechecked later.
"""

from genus2pencils import catalog
from genus2pencils.modelfile import from_fibration, parse, serialize, to_fibration

entry = catalog.get("B1")
model = from_fibration(entry.fibration, effective=entry.effective)

text = serialize(model)
print("serialized model:")
print(text)

again = parse(text)
assert again == model
assert serialize(again) == text
print("parse(serialize(model)) == model: exact round trip")

fib = to_fibration(again)
fib.validate()
f = fib.fibre_class
k = fib.surface.canonical()
print(f"rebuilt fibration: F*F = {f * f}, K*F = {k * f}, genus {fib.genus}")

# a malformed file fails loudly, with a line number
broken = text.replace("surface plane n=11", "surface plane n=eleven")
try:
    parse(broken)
except ValueError as exc:
    print(f"malformed input is rejected: {exc}")
