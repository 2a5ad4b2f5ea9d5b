import { Component } from '@angular/core';
import { Booking, Api } from './booking.model';

@Component({
  selector: 'app-booking-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class BookingDetailComponent {
  current: Booking | null = null;
  constructor(private api: Api) {}

  parse(raw: string): Booking {
    return JSON.parse(raw) as Booking;
  }

  cache = new Map<string, Booking>();

  toView(x: Booking) {
    return x.name;
  }

}
