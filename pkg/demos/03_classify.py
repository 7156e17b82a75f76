"""Classify a few localised Brauer classes and print the resulting certificates."""
# %%
from toralorders.classifier import LocalisedBrauerClass, certificate_text, report_json

classes = [
    {"variant": "singular_hj", "q": 7, "m_list": [2, 2], "g": {"prime": "end_left", "value": 2}},
    {"variant": "regular_with_secondary", "q": 13, "n": 3, "a": 2, "b": 5},
    {"variant": "singular_hj", "q": 9, "m_list": [3, 3], "n": 8},
    {"variant": "singular_hj", "q": 5, "m_list": [2, 2, 2], "g": {"prime": "E_2", "value": 2}},
]

for obj in classes:
    report, code = report_json(LocalisedBrauerClass.from_json(obj), N=4)
    print(certificate_text(report))
    print("exit", code)
    print("-" * 60)
