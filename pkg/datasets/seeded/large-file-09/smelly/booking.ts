import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-booking-header', template: `<p>{{ title }}</p>` })
export class BookingHeaderComponent { title = 'Booking header'; }

@Component({ selector: 'app-booking-footer', template: `<p>{{ title }}</p>` })
export class BookingFooterComponent { title = 'Booking footer'; }

@Injectable({ providedIn: 'root' })
export class BookingAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}

@Injectable({ providedIn: 'root' })
export class BookingSessionService {
  run(event: string) { return event + 'session'; }
}

@Component({ selector: 'app-booking-sidebar', template: `<p>{{ title }}</p>` })
export class BookingSidebarComponent { title = 'Booking sidebar'; }
