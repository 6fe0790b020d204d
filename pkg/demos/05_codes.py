"""The classical side of the analogy: binary block codes.

Proof nets in a family keep pairwise distance >= 2, like the codewords of
a one-error-detecting code; no family can do better, unlike the Hamming
(7,4) code which corrects single errors.
"""

from mllnets import (
    BinaryWord,
    code_distance,
    hamming74,
    is_one_error_correcting,
    word_distance,
)

w1 = BinaryWord.from_string("00110")
w2 = BinaryWord.from_string("10011")
print(f"d({w1}, {w2}) = {word_distance(w1, w2)}")

code = hamming74()
print(f"\nHamming (7,4): |C| = {len(code)}, d(C) = {code_distance(code)}")
for cw in sorted(code.words, key=str)[:4]:
    print(" ", cw)
print("  ...")

print("one-error-correcting over all 128 words:", is_one_error_correcting(code))

# every weight-1 corruption lands strictly closer to its source codeword
zero = BinaryWord.from_string("0000000")
corrupted = BinaryWord((1, 0, 0, 0, 0, 0, 0))
near = min(code.words, key=lambda cw: word_distance(corrupted, cw))
print("nearest codeword to", corrupted, "is", near)
