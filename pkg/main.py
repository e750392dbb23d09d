from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import ValidationError
import logging
import time
import uvicorn

from app.core.config import settings
from app.api.routes import checks, representations, series
from app.core.exceptions import ErrorResponse, StableCohomologyError

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


app = FastAPI(
    title=settings.PROJECT_NAME,
    description="Stable cohomology of mapping class groups with symplectic coefficients",
    version=settings.VERSION,
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=[origin.strip() for origin in settings.CORS_ORIGINS.split(",")],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Add request logging middleware
@app.middleware("http")
async def log_requests(request: Request, call_next):
    start_time = time.time()
    response = await call_next(request)
    process_time = time.time() - start_time
    logger.info(f"{request.method} {request.url.path} - {response.status_code} - {process_time:.4f}s")
    return response


@app.exception_handler(StableCohomologyError)
async def stable_cohomology_exception_handler(request: Request, exc: StableCohomologyError):
    error = ErrorResponse.from_exception(exc)
    logger.warning(f"{request.url.path}: {exc.message}")
    return JSONResponse(status_code=error.status_code, content=error.to_dict())


# Domain models built inside services (e.g. SymplecticContext) validate their own input
@app.exception_handler(ValidationError)
async def validation_exception_handler(request: Request, exc: ValidationError):
    error = ErrorResponse.from_validation_error(exc)
    return JSONResponse(status_code=422, content=error.to_dict())


# Include API routers
app.include_router(series.router, prefix="/api/series", tags=["Series"])
app.include_router(representations.router, prefix="/api/representations", tags=["Representations"])
app.include_router(checks.router, prefix="/api/checks", tags=["Checks"])


@app.get("/health", tags=["Health"])
async def health_check():
    """
    Health check endpoint to verify API is running
    """
    return {"status": "healthy", "version": settings.VERSION}


if __name__ == "__main__":
    uvicorn.run("main:app", host="0.0.0.0", port=8000, reload=True)
