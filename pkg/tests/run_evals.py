import os
import sys
import pandas as pd
from sklearn.metrics import accuracy_score, classification_report, confusion_matrix
try:
    from app.config import VerifierSettings
    from app.modules.regression_suite import run_suite
except ImportError:
    sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
    from app.config import VerifierSettings
    from app.modules.regression_suite import run_suite
from app.modules.reports import summary_frame


def run_evals(stretch=False):
    settings = VerifierSettings()
    print(f"Running the regression suite (seed={settings.seed}, stretch={stretch})...")
    reports = run_suite(settings, stretch=stretch)
    print(f"Ran {len(reports)} cases.")

    # Verdicts
    y_true = [r.expected_verdict for r in reports if r.expected_verdict is not None]
    y_pred = [r.verdict for r in reports if r.expected_verdict is not None]
    if y_true:
        print(f"\nVerdict accuracy: {accuracy_score(y_true, y_pred):.2f}")
        print("\nVerdict report:")
        print(classification_report(y_true, y_pred, zero_division=0))
        labels = sorted(set(y_true) | set(y_pred))
        matrix = confusion_matrix(y_true, y_pred, labels=labels)
        print(pd.DataFrame(matrix, index=[f"true {l}" for l in labels], columns=[f"pred {l}" for l in labels]))
    else:
        print("No expected verdicts to evaluate.")

    # Theorem tags, only where the case pins one
    tagged = [r for r in reports if r.expected_classification is not None]
    if tagged:
        t_true = [r.expected_classification for r in tagged]
        t_pred = [r.classification for r in tagged]
        print(f"\nClassification accuracy: {accuracy_score(t_true, t_pred):.2f}")
        print(classification_report(t_true, t_pred, zero_division=0))

    frame = summary_frame(reports)
    print("\nSlowest cases:")
    print(frame.sort_values("ms", ascending=False).head(5).to_string(index=False))
    mismatched = frame[~frame["ok"]]
    if len(mismatched):
        print("\nMismatches:")
        print(mismatched.to_string(index=False))
    return frame


if __name__ == "__main__":
    run_evals(stretch="--stretch" in sys.argv)
