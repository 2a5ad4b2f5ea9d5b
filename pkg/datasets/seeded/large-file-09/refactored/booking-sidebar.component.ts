import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-booking-sidebar', template: `<p>{{ title }}</p>` })
export class BookingSidebarComponent { title = 'Booking sidebar'; }
