from app.core.exceptions import ConsistencyError, ErrorResponse, SizeLimitError


def test_error_response_from_domain_error():
    body = ErrorResponse.from_exception(SizeLimitError("s", 20, 1, 12)).to_dict()
    assert body["status_code"] == 413
    assert body["message"] == "s=20 is outside the supported range [1, 12]"
    assert body["details"] == {"error": "SizeLimitError", "parameter": "s", "value": 20, "min": 1, "max": 12}


def test_error_response_keeps_the_error_status():
    body = ErrorResponse.from_exception(ConsistencyError("rank is not a multiple")).to_dict()
    assert body == {
        "message": "rank is not a multiple",
        "status_code": 500,
        "details": {"error": "ConsistencyError"},
    }
